#include "permcheck/permutability.hpp"

#include <stdexcept>

namespace permcheck {

ElementSet product_set(const GroupTable& g, const Bitset& a, const Bitset& b) {
  Bitset out(g.order());
  a.for_each([&](int x) {
    b.for_each([&](int y) { out.set(g.mul(x, y)); });
  });
  return ElementSet{&g, std::move(out)};
}

ElementSet product_set(const ElementSet& a, const ElementSet& b) {
  if (a.parent != b.parent) throw std::invalid_argument("product_set: parent mismatch");
  return product_set(*a.parent, a.members, b.members);
}

Perm4Verdict perm4(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& k) {
  SubgroupSet join = join_subgroups(h, k);
  Bitset hk = product_set(g, h.members(), k.members()).members;
  Bitset hkh = product_set(g, hk, h.members()).members;
  ElementSet hkhk = product_set(g, hkh, k.members());

  Perm4Verdict v{false, std::move(join), std::move(hkhk), {}};
  v.holds = v.product.members == v.join.members();
  if (!v.holds)
    v.witness_note = "|HKHK| = " + std::to_string(v.product.size()) +
                     " < |<H,K>| = " + std::to_string(v.join.size());
  return v;
}

bool permutes(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& k) {
  return product_set(g, h.members(), k.members()).members ==
         product_set(g, k.members(), h.members()).members;
}

bool is_permutable(const GroupTable& g, const SubgroupSet& h, const Lattice& lattice) {
  for (int i = 0; i < lattice.size(); ++i)
    if (!permutes(g, h, lattice.subgroup(i))) return false;
  return true;
}

bool is_s_permutable(const GroupTable& g, const SubgroupSet& h, const Lattice& lattice) {
  for (int p : prime_divisors(g.order()))
    for (int i : lattice.sylow_subgroups(p))
      if (!permutes(g, h, lattice.subgroup(i))) return false;
  return true;
}

Sqn4Result is_sqn4(const GroupTable& g, const SubgroupSet& h, const Lattice& lattice) {
  for (int i = 0; i < lattice.size(); ++i) {
    if (!perm4(g, h, lattice.subgroup(i)).holds)
      return {false, lattice.subgroup(i)};
  }
  return {true, std::nullopt};
}

bool is_qn4(const GroupTable& g, const SubgroupSet& h, const Lattice& lattice) {
  for (int i = 0; i < lattice.size(); ++i) {
    if (!lattice.cyclic(i)) continue;
    if (!perm4(g, h, lattice.subgroup(i)).holds) return false;
  }
  return true;
}

bool sqn4_in_subgroup(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& k) {
  if (!h.members().subset_of(k.members()))
    throw std::invalid_argument("sqn4_in_subgroup: h is not contained in k");
  if (k.members() == h.members()) return true;
  SubgroupTable st = subgroup_table(g, k);
  SubgroupSet h_local = SubgroupSet::from_closed_bitset(st.group(), st.lower(h.members()));
  Lattice inner = all_subgroups(st.group(), st.group().order());
  return is_sqn4(st.group(), h_local, inner).holds;
}

}  // namespace permcheck
