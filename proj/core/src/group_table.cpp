#include "permcheck/group_table.hpp"

#include <random>
#include <stdexcept>

namespace permcheck {

GroupTable GroupTable::closure(std::vector<Permutation> generators, int max_order) {
  if (generators.empty())
    throw std::invalid_argument("closure: generator list must be nonempty");
  const int degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("closure: degree mismatch");

  GroupTable t;
  t.degree_ = degree;
  t.elements_.push_back(Permutation::identity(degree));
  t.index_.emplace(t.elements_.front(), 0);

  // BFS from the identity; right-multiplying by generators in input order
  // fixes the element numbering.
  for (std::size_t pos = 0; pos < t.elements_.size(); ++pos) {
    for (const auto& g : generators) {
      Permutation next = compose(t.elements_[pos], g);
      if (t.index_.contains(next)) continue;
      if (static_cast<int>(t.elements_.size()) >= max_order)
        throw CapExceeded("closure: group order exceeds cap of " + std::to_string(max_order));
      t.index_.emplace(next, static_cast<int>(t.elements_.size()));
      t.elements_.push_back(std::move(next));
    }
  }

  for (const auto& g : generators) {
    int gi = t.index_.at(g);
    bool dup = false;
    for (int seen : t.gen_idx_) dup |= (seen == gi);
    if (!dup) t.gen_idx_.push_back(gi);
  }
  if (t.gen_idx_.empty()) t.gen_idx_.push_back(0);

  const int n = t.order();
  t.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.mul_[static_cast<std::size_t>(i) * n + j] = t.index_.at(compose(t.elements_[i], t.elements_[j]));
  t.inv_.resize(n);
  for (int i = 0; i < n; ++i) t.inv_[i] = t.index_.at(t.elements_[i].inverse());

  t.finish_and_validate();
  return t;
}

GroupTable GroupTable::from_parts(std::vector<Permutation> elements, std::vector<int> mul,
                                  std::vector<int> inv, std::vector<int> generator_indices) {
  if (elements.empty()) throw std::invalid_argument("from_parts: no elements");
  GroupTable t;
  t.degree_ = elements.front().degree();
  t.elements_ = std::move(elements);
  t.mul_ = std::move(mul);
  t.inv_ = std::move(inv);
  t.gen_idx_ = std::move(generator_indices);
  const int n = t.order();
  if (t.mul_.size() != static_cast<std::size_t>(n) * n || t.inv_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("from_parts: table size mismatch");
  for (int i = 0; i < n; ++i) {
    if (t.elements_[i].degree() != t.degree_)
      throw std::invalid_argument("from_parts: degree mismatch");
    if (!t.index_.emplace(t.elements_[i], i).second)
      throw std::invalid_argument("from_parts: duplicate element");
  }
  if (t.gen_idx_.empty()) throw std::invalid_argument("from_parts: no generators");
  t.finish_and_validate();
  return t;
}

void GroupTable::finish_and_validate() {
  const int n = order();
  if (!elements_[0].is_identity())
    throw std::logic_error("group table: identity must sit at index 0");

  // Latin-square property of the multiplication table, both directions.
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = mul(i, j);
      if (v < 0 || v >= n || seen[v]) throw std::logic_error("group table: row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      int v = mul(i, j);
      if (seen[v]) throw std::logic_error("group table: column is not a permutation");
      seen[v] = 1;
    }
  }

  for (int i = 0; i < n; ++i) {
    if (inv_[i] < 0 || inv_[i] >= n || mul(i, inv_[i]) != 0 || mul(inv_[i], i) != 0)
      throw std::logic_error("group table: inverse table inconsistent");
    if (mul(0, i) != i || mul(i, 0) != i)
      throw std::logic_error("group table: identity row/column broken");
  }
  for (int gi : gen_idx_)
    if (gi < 0 || gi >= n) throw std::logic_error("group table: generator index out of range");

  // Associativity: exhaustive for small tables, deterministic sampling
  // above (the construction paths guarantee it; this guards table bugs).
  auto check = [&](int i, int j, int k) {
    if (mul(mul(i, j), k) != mul(i, mul(j, k)))
      throw std::logic_error("group table: associativity violated");
  };
  if (n <= 64) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) check(i, j, k);
  } else {
    std::mt19937 rng(0xA55Au);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < 10 * n; ++s) check(pick(rng), pick(rng), pick(rng));
  }
}

int GroupTable::element_order(int i) const {
  int k = 1;
  int x = i;
  while (x != 0) {
    x = mul(x, i);
    ++k;
  }
  return k;
}

std::optional<int> GroupTable::element_index(const Permutation& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("element_index: degree mismatch");
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool GroupTable::is_abelian() const {
  const int n = order();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

}  // namespace permcheck
