#include "permcheck/quotient.hpp"

#include <stdexcept>

#include "permcheck/lattice.hpp"

namespace permcheck {

SubgroupSet QuotientMap::image(const SubgroupSet& h) const {
  if (&h.parent() != parent_) throw std::invalid_argument("image: parent mismatch");
  Bitset out(quotient_->order());
  h.members().for_each([&](int x) { out.set(coset_of_[x]); });
  return SubgroupSet::checked(*quotient_, out);
}

QuotientMap quotient(const GroupTable& g, const SubgroupSet& kernel) {
  if (&kernel.parent() != &g) throw std::invalid_argument("quotient: kernel has a different parent");
  if (!is_subgroup_set(g, kernel.members()))
    throw std::invalid_argument("quotient: kernel is not a subgroup");
  if (!is_normal(g, kernel))
    throw std::invalid_argument("quotient: kernel is not normal");

  QuotientMap q(g, kernel);
  const int n = g.order();
  q.coset_of_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (q.coset_of_[i] >= 0) continue;
    int c = static_cast<int>(q.reps_.size());
    q.reps_.push_back(i);
    kernel.members().for_each([&](int m) { q.coset_of_[g.mul(i, m)] = c; });
  }

  const int k = static_cast<int>(q.reps_.size());
  std::vector<int> mul(static_cast<std::size_t>(k) * k);
  std::vector<int> inv(k);
  for (int a = 0; a < k; ++a) {
    inv[a] = q.coset_of_[g.inv(q.reps_[a])];
    for (int b = 0; b < k; ++b)
      mul[static_cast<std::size_t>(a) * k + b] = q.coset_of_[g.mul(q.reps_[a], q.reps_[b])];
  }

  // Row a of the coset multiplication table is the left-translation
  // permutation realizing coset a.
  std::vector<Permutation> elements;
  elements.reserve(k);
  for (int a = 0; a < k; ++a) {
    std::vector<int> im(mul.begin() + static_cast<std::size_t>(a) * k,
                        mul.begin() + static_cast<std::size_t>(a + 1) * k);
    elements.emplace_back(std::move(im));
  }

  std::vector<int> gens;
  for (int gi : g.generator_indices()) {
    int c = q.coset_of_[gi];
    bool dup = (c == 0);
    for (int seen : gens) dup |= (seen == c);
    if (!dup) gens.push_back(c);
  }
  if (gens.empty()) gens.push_back(0);

  q.quotient_ = std::make_unique<GroupTable>(
      GroupTable::from_parts(std::move(elements), std::move(mul), std::move(inv), std::move(gens)));
  return q;
}

}  // namespace permcheck
