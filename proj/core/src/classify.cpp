#include "permcheck/classify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace permcheck {

namespace {

// Hash a multiplication table; memo key for the supersolvability
// recursion, where isomorphic quotients recur with identical tables.
struct MulKey {
  std::vector<int> mul;
  friend bool operator==(const MulKey&, const MulKey&) = default;
};

struct MulKeyHash {
  std::size_t operator()(const MulKey& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int v : k.mul) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

MulKey mul_key(const GroupTable& g) {
  const int n = g.order();
  MulKey k;
  k.mul.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) k.mul.push_back(g.mul(i, j));
  return k;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool supersolvable_rec(const GroupTable& g, const Caps& caps,
                       std::unordered_map<MulKey, bool, MulKeyHash>& memo) {
  if (g.order() == 1) return true;
  MulKey key = mul_key(g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  bool result = false;
  Lattice lat = all_subgroups(g, caps.max_lattice_order);
  for (int i = 0; i < lat.size() && !result; ++i) {
    if (!lat.normal(i) || !is_prime(lat.subgroup(i).size())) continue;
    QuotientMap q = quotient(g, lat.subgroup(i));
    result = supersolvable_rec(q.group(), caps, memo);
  }
  memo.emplace(std::move(key), result);
  return result;
}

// Lattice indices sorted by descending subgroup size, canonical order
// within equal sizes.
std::vector<int> indices_by_descending_size(const Lattice& lat) {
  std::vector<int> order(lat.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return lat.subgroup(a).size() > lat.subgroup(b).size();
  });
  return order;
}

}  // namespace

bool is_solvable(const GroupTable& g) { return derived_series(g).back().size() == 1; }

bool is_supersolvable(const GroupTable& g, const Caps& caps) {
  std::unordered_map<MulKey, bool, MulKeyHash> memo;
  return supersolvable_rec(g, caps, memo);
}

bool is_nilpotent(const GroupTable& g, const Lattice& lattice) {
  for (int p : prime_divisors(g.order()))
    for (int i : lattice.sylow_subgroups(p))
      if (!lattice.normal(i)) return false;
  return true;
}

bool is_modular_lattice(const GroupTable& g, const Lattice& lattice) {
  const int n = lattice.size();
  // Meet and join tables over lattice positions; every meet of subgroups
  // is again a subgroup, so the lookups always succeed.
  std::vector<int> meet(static_cast<std::size_t>(n) * n), join(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Bitset m = lattice.subgroup(i).members() & lattice.subgroup(j).members();
      int mi = lattice.find(m).value();
      int ji = lattice.find(join_subgroups(lattice.subgroup(i), lattice.subgroup(j)).members()).value();
      meet[static_cast<std::size_t>(i) * n + j] = meet[static_cast<std::size_t>(j) * n + i] = mi;
      join[static_cast<std::size_t>(i) * n + j] = join[static_cast<std::size_t>(j) * n + i] = ji;
    }
  }
  auto meet_at = [&](int a, int b) { return meet[static_cast<std::size_t>(a) * n + b]; };
  auto join_at = [&](int a, int b) { return join[static_cast<std::size_t>(a) * n + b]; };

  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      if (!lattice.subgroup(x).members().subset_of(lattice.subgroup(z).members())) continue;
      for (int y = 0; y < n; ++y)
        if (join_at(x, meet_at(y, z)) != meet_at(join_at(x, y), z)) return false;
    }
  (void)g;
  return true;
}

PtVerdict is_pt_group(const GroupTable& g, const Lattice& lattice) {
  const int n = lattice.size();
  std::vector<char> permutable(n);
  bool all = true;
  for (int i = 0; i < n; ++i) {
    permutable[i] = is_permutable(g, lattice.subgroup(i), lattice) ? 1 : 0;
    all = all && permutable[i];
  }
  // A violating chain needs some non-permutable subgroup of G.
  if (all) return {true, std::nullopt};

  for (int hi = 0; hi < n; ++hi) {
    if (!permutable[hi]) continue;
    const SubgroupSet& mid = lattice.subgroup(hi);
    if (mid.size() == g.order() || mid.size() == 1) continue;  // chains through G or 1 cannot violate
    // Skip H unless some non-permutable subgroup lies inside it.
    bool candidate = false;
    for (int i = 0; i < n && !candidate; ++i)
      candidate = !permutable[i] && lattice.subgroup(i).members().subset_of(mid.members());
    if (!candidate) continue;

    SubgroupTable st = subgroup_table(g, mid);
    Lattice inner = all_subgroups(st.group(), st.group().order());
    for (int ki = 0; ki < inner.size(); ++ki) {
      if (!is_permutable(st.group(), inner.subgroup(ki), inner)) continue;
      Bitset parent_side = st.lift(inner.subgroup(ki).members());
      int pos = lattice.find(parent_side).value();
      if (!permutable[pos])
        return {false, SubgroupChain{lattice.subgroup(pos), mid}};
    }
  }
  return {true, std::nullopt};
}

Sq4tVerdict is_sq4t_group(const GroupTable& g, const Lattice& lattice) {
  const int n = lattice.size();
  std::vector<char> sqn4_in_g(n);
  bool all = true;
  for (int i = 0; i < n; ++i) {
    sqn4_in_g[i] = is_sqn4(g, lattice.subgroup(i), lattice).holds ? 1 : 0;
    all = all && sqn4_in_g[i];
  }
  if (all) return {true, std::nullopt};

  for (int ki : indices_by_descending_size(lattice)) {
    if (!sqn4_in_g[ki]) continue;
    const SubgroupSet& mid = lattice.subgroup(ki);
    if (mid.size() == g.order() || mid.size() == 1) continue;
    bool candidate = false;
    for (int i = 0; i < n && !candidate; ++i)
      candidate = !sqn4_in_g[i] && lattice.subgroup(i).members().subset_of(mid.members());
    if (!candidate) continue;

    SubgroupTable st = subgroup_table(g, mid);
    Lattice inner = all_subgroups(st.group(), st.group().order());
    for (int hi = 0; hi < inner.size(); ++hi) {
      if (!is_sqn4(st.group(), inner.subgroup(hi), inner).holds) continue;
      Bitset parent_side = st.lift(inner.subgroup(hi).members());
      int pos = lattice.find(parent_side).value();
      if (!sqn4_in_g[pos])
        return {false, SubgroupChain{lattice.subgroup(pos), mid}};
    }
  }
  return {true, std::nullopt};
}

std::optional<ZacherWitness> zacher_witness(const GroupTable& g, const Lattice& lattice,
                                            const Caps& caps) {
  for (int li : indices_by_descending_size(lattice)) {
    const SubgroupSet& l = lattice.subgroup(li);
    if (!lattice.normal(li) || l.size() % 2 == 0) continue;
    if (std::gcd(l.size(), g.order() / l.size()) != 1) continue;  // Hall
    bool abelian = true;
    l.members().for_each([&](int x) {
      l.members().for_each([&](int y) { abelian = abelian && g.mul(x, y) == g.mul(y, x); });
    });
    if (!abelian) continue;

    QuotientMap q = quotient(g, l);
    Lattice qlat = all_subgroups(q.group(), caps.max_lattice_order);
    if (!is_nilpotent(q.group(), qlat)) continue;
    if (!is_modular_lattice(q.group(), qlat)) continue;

    // Conjugation by any group element must map each x in L into <x>.
    bool power_autos = true;
    l.members().for_each([&](int x) {
      Bitset seed(g.order());
      seed.set(x);
      SubgroupSet cyc = generated_subgroup(g, seed);
      for (int t = 0; t < g.order() && power_autos; ++t)
        power_autos = cyc.contains(g.conjugate(x, t));
    });
    if (!power_autos) continue;

    return ZacherWitness{l, true, true, true};
  }
  return std::nullopt;
}

void ClassificationReport::assert_implications() const {
  if (abelian && !nilpotent)
    throw std::logic_error("report for " + group_name + ": abelian but not nilpotent");
  if (nilpotent && !supersolvable)
    throw std::logic_error("report for " + group_name + ": nilpotent but not supersolvable");
  if (supersolvable && !solvable)
    throw std::logic_error("report for " + group_name + ": supersolvable but not solvable");
}

ClassificationReport classify(const GroupTable& g, std::string name, const Caps& caps) {
  using clock = std::chrono::steady_clock;
  auto timed = [](auto&& fn, double& slot) {
    auto t0 = clock::now();
    auto result = fn();
    slot = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return result;
  };

  ClassificationReport r;
  r.group_name = std::move(name);
  r.order = g.order();

  double lattice_ms = 0;
  Lattice lat = timed([&] { return all_subgroups(g, caps.max_lattice_order); }, lattice_ms);
  r.elapsed_ms["lattice"] = lattice_ms;
  r.num_subgroups = lat.size();

  r.abelian = timed([&] { return g.is_abelian(); }, r.elapsed_ms["abelian"]);
  r.nilpotent = timed([&] { return is_nilpotent(g, lat); }, r.elapsed_ms["nilpotent"]);
  r.solvable = timed([&] { return is_solvable(g); }, r.elapsed_ms["solvable"]);
  r.supersolvable = timed([&] { return is_supersolvable(g, caps); }, r.elapsed_ms["supersolvable"]);

  PtVerdict pt = timed([&] { return is_pt_group(g, lat); }, r.elapsed_ms["pt"]);
  r.pt = pt.holds;
  if (pt.violation) {
    r.witnesses.push_back({"permutability is not transitive",
                           {pt.violation->inner, pt.violation->mid},
                           "inner subgroup is permutable in the middle subgroup but not in G"});
  }

  Sq4tVerdict sq = timed([&] { return is_sq4t_group(g, lat); }, r.elapsed_ms["sq4t"]);
  r.sq4t = sq.holds;
  if (sq.violation) {
    r.witnesses.push_back({"sqn4 is not transitive",
                           {sq.violation->inner, sq.violation->mid},
                           "inner subgroup is sqn4 in the middle subgroup but not in G"});
  }

  r.assert_implications();
  return r;
}

}  // namespace permcheck
