#pragma once

#include <optional>
#include <string>

#include "permcheck/lattice.hpp"
#include "permcheck/subgroup_set.hpp"

namespace permcheck {

// {x*y : x in a, y in b}. Product sets are plain element sets; they are
// generally not subgroups.
ElementSet product_set(const ElementSet& a, const ElementSet& b);
ElementSet product_set(const GroupTable& g, const Bitset& a, const Bitset& b);

// Outcome of one 4-permutability test: H perm4 K iff <H,K> = HKHK.
// HKHK always sits inside the join, so `holds` is exactly
// product.members == join.members.
struct Perm4Verdict {
  bool holds;
  SubgroupSet join;    // <H,K>
  ElementSet product;  // HKHK, associated as ((H*K)*H)*K
  std::string witness_note;
};

Perm4Verdict perm4(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& k);

// HK = KH as sets (equivalently, HK is a subgroup).
bool permutes(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& k);

// H permutes with every subgroup of g.
bool is_permutable(const GroupTable& g, const SubgroupSet& h, const Lattice& lattice);

// H permutes with every Sylow subgroup of g, over every prime dividing the
// group order.
bool is_s_permutable(const GroupTable& g, const SubgroupSet& h, const Lattice& lattice);

struct Sqn4Result {
  bool holds;
  std::optional<SubgroupSet> witness;  // first K (canonical order) with <H,K> != HKHK
};

// H perm4 K for every subgroup K of g ("strongly 4-quasinormal").
Sqn4Result is_sqn4(const GroupTable& g, const SubgroupSet& h, const Lattice& lattice);

// H perm4 K for every cyclic subgroup K of g ("4-quasinormal").
bool is_qn4(const GroupTable& g, const SubgroupSet& h, const Lattice& lattice);

// Decides sqn4 of h within the group k (h <= k <= g), on k's own table.
// Throws std::invalid_argument when h is not contained in k.
bool sqn4_in_subgroup(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& k);

}  // namespace permcheck
