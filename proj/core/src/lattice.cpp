#include "permcheck/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permcheck {

SubgroupSet generated_subgroup(const GroupTable& g, const Bitset& seed) {
  const int n = g.order();
  Bitset members(n);
  members.set(0);
  std::vector<int> list;
  list.push_back(0);
  seed.for_each([&](int i) {
    if (!members.test(i)) {
      members.set(i);
      list.push_back(i);
    }
  });

  auto add = [&](int x) {
    if (!members.test(x)) {
      members.set(x);
      list.push_back(x);
    }
  };
  // Every pair (list[i], list[j]) gets multiplied once max(i, j) is
  // processed; finite order makes inverses fall out of products.
  for (std::size_t done = 0; done < list.size(); ++done) {
    int x = list[done];
    for (std::size_t j = 0; j <= done; ++j) {
      int y = list[j];
      add(g.mul(x, y));
      add(g.mul(y, x));
    }
  }
  return SubgroupSet::from_closed_bitset(g, std::move(members));
}

SubgroupSet join_subgroups(const SubgroupSet& a, const SubgroupSet& b) {
  if (&a.parent() != &b.parent())
    throw std::invalid_argument("join_subgroups: parent mismatch");
  if (b.members().subset_of(a.members())) return a;
  if (a.members().subset_of(b.members())) return b;
  return generated_subgroup(a.parent(), a.members() | b.members());
}

std::optional<int> Lattice::find(const Bitset& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Lattice::sylow_subgroups(int p) const {
  const int n = parent_->order();
  if (p < 2 || n % p != 0)
    throw std::invalid_argument("sylow_subgroups: prime does not divide the group order");
  int pa = 1;
  while ((n / pa) % p == 0) pa *= p;
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (subgroups_[i].size() == pa) out.push_back(i);
  return out;
}

std::vector<int> Lattice::hall_subgroups(const std::vector<int>& primes) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    int sz = subgroups_[i].size();
    int idx = parent_->order() / sz;
    int rest = sz;
    for (int p : primes)
      while (rest % p == 0) rest /= p;
    if (rest != 1) continue;  // order has a prime outside the set
    bool coprime = true;
    for (int p : primes) coprime &= (idx % p != 0);
    if (coprime) out.push_back(i);
  }
  return out;
}

Lattice all_subgroups(const GroupTable& g, int lattice_cap) {
  if (g.order() > lattice_cap)
    throw CapExceeded("all_subgroups: group order " + std::to_string(g.order()) +
                      " exceeds lattice cap of " + std::to_string(lattice_cap));

  // Distinct cyclic subgroups, canonical order for determinism.
  std::vector<SubgroupSet> cyclics;
  {
    std::unordered_map<Bitset, char, BitsetHash> seen;
    for (int x = 1; x < g.order(); ++x) {
      Bitset seed(g.order());
      seed.set(x);
      SubgroupSet c = generated_subgroup(g, seed);
      if (seen.emplace(c.members(), 1).second) cyclics.push_back(std::move(c));
    }
    std::sort(cyclics.begin(), cyclics.end(), SubgroupCanonicalLess{});
  }

  std::vector<SubgroupSet> found;
  std::unordered_map<Bitset, char, BitsetHash> known;
  auto add = [&](SubgroupSet s) {
    if (known.emplace(s.members(), 1).second) found.push_back(std::move(s));
  };
  add(trivial_subgroup(g));
  for (const auto& c : cyclics) add(c);

  // Join every discovered subgroup with every cyclic subgroup until no new
  // subgroup appears.
  for (std::size_t pos = 0; pos < found.size(); ++pos) {
    for (const auto& c : cyclics) {
      if (c.members().subset_of(found[pos].members())) continue;
      add(generated_subgroup(g, found[pos].members() | c.members()));
    }
  }

  std::sort(found.begin(), found.end(), SubgroupCanonicalLess{});

  Lattice lat;
  lat.parent_ = &g;
  lat.subgroups_ = std::move(found);
  lat.normal_.resize(lat.subgroups_.size());
  lat.cyclic_.resize(lat.subgroups_.size());
  for (int i = 0; i < lat.size(); ++i) {
    const SubgroupSet& s = lat.subgroups_[i];
    lat.index_.emplace(s.members(), i);
    lat.normal_[i] = is_normal(g, s) ? 1 : 0;
    bool cyc = false;
    s.members().for_each([&](int x) { cyc = cyc || g.element_order(x) == s.size(); });
    lat.cyclic_[i] = cyc || s.size() == 1;
  }
  return lat;
}

bool is_normal(const GroupTable& g, const SubgroupSet& h) {
  for (int t : g.generator_indices()) {
    bool same = true;
    h.members().for_each([&](int x) { same = same && h.contains(g.conjugate(x, t)); });
    if (!same) return false;
  }
  return true;
}

SubgroupSet commutator_subgroup(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& k) {
  Bitset seed(g.order());
  h.members().for_each([&](int x) {
    int xi = g.inv(x);
    k.members().for_each([&](int y) {
      seed.set(g.mul(g.mul(xi, g.inv(y)), g.mul(x, y)));
    });
  });
  return generated_subgroup(g, seed);
}

std::vector<SubgroupSet> derived_series(const GroupTable& g) {
  std::vector<SubgroupSet> series;
  series.push_back(full_subgroup(g));
  while (series.back().size() > 1) {
    SubgroupSet next = commutator_subgroup(g, series.back(), series.back());
    bool stable = next.members() == series.back().members();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

SubgroupSet normal_closure(const GroupTable& g, const SubgroupSet& ambient, const SubgroupSet& h) {
  Bitset seed(g.order());
  ambient.members().for_each([&](int t) {
    h.members().for_each([&](int x) { seed.set(g.conjugate(x, t)); });
  });
  return generated_subgroup(g, seed);
}

bool is_subnormal(const GroupTable& g, const SubgroupSet& h) {
  SubgroupSet ambient = full_subgroup(g);
  while (true) {
    SubgroupSet next = normal_closure(g, ambient, h);
    if (next.members() == ambient.members()) return ambient.members() == h.members();
    ambient = std::move(next);
  }
}

SubgroupSet centralizer(const GroupTable& g, const SubgroupSet& h) {
  Bitset members(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool commutes = true;
    h.members().for_each([&](int y) { commutes = commutes && g.mul(x, y) == g.mul(y, x); });
    if (commutes) members.set(x);
  }
  return SubgroupSet::from_closed_bitset(g, std::move(members));
}

SubgroupSet normalizer(const GroupTable& g, const SubgroupSet& h) {
  Bitset members(g.order());
  for (int t = 0; t < g.order(); ++t) {
    bool same = true;
    h.members().for_each([&](int x) { same = same && h.contains(g.conjugate(x, t)); });
    if (same) members.set(t);
  }
  return SubgroupSet::from_closed_bitset(g, std::move(members));
}

Bitset SubgroupTable::lower(const Bitset& parent_side) const {
  Bitset out(table_->order());
  parent_side.for_each([&](int p) {
    int l = to_local_[p];
    if (l < 0) throw std::invalid_argument("lower: element outside the subgroup");
    out.set(l);
  });
  return out;
}

Bitset SubgroupTable::lift(const Bitset& local) const {
  Bitset out(static_cast<int>(to_local_.size()));
  local.for_each([&](int l) { out.set(to_parent_[l]); });
  return out;
}

SubgroupTable subgroup_table(const GroupTable& g, const SubgroupSet& h) {
  SubgroupTable st;
  st.to_parent_ = h.members().to_indices();  // ascending; parent identity first
  st.to_local_.assign(g.order(), -1);
  const int n = static_cast<int>(st.to_parent_.size());
  for (int i = 0; i < n; ++i) st.to_local_[st.to_parent_[i]] = i;

  std::vector<Permutation> elements;
  elements.reserve(n);
  for (int i = 0; i < n; ++i) elements.push_back(g.element(st.to_parent_[i]));

  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) {
    inv[i] = st.to_local_[g.inv(st.to_parent_[i])];
    for (int j = 0; j < n; ++j) {
      int p = g.mul(st.to_parent_[i], st.to_parent_[j]);
      int l = st.to_local_[p];
      if (l < 0) throw std::invalid_argument("subgroup_table: set is not closed");
      mul[static_cast<std::size_t>(i) * n + j] = l;
    }
  }

  // Greedy generating set: sweep elements, adding any not yet generated.
  std::vector<int> gens;
  {
    Bitset seen(g.order());
    seen.set(0);
    for (int i = 1; i < n; ++i) {
      int p = st.to_parent_[i];
      if (seen.test(p)) continue;
      gens.push_back(i);
      Bitset seed(g.order());
      for (int gi : gens) seed.set(st.to_parent_[gi]);
      seen = generated_subgroup(g, seed).members();
    }
    if (gens.empty()) gens.push_back(0);
  }

  st.table_ = std::make_unique<GroupTable>(
      GroupTable::from_parts(std::move(elements), std::move(mul), std::move(inv), std::move(gens)));
  return st;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace permcheck
