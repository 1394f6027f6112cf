#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permcheck/group_table.hpp"

namespace permcheck {

// Recipe for a builtin or file-backed group. Names follow the CLI grammar:
// C7, D12, S4, A5, Q8, C2xC2, file:path. Direct products combine two
// recipes on disjoint point sets.
struct GroupSpec {
  enum class Kind { cyclic, dihedral, symmetric, alternating, quaternion8, direct_product, from_file };

  Kind kind = Kind::cyclic;
  int n = 1;                      // C/S/A: points; D: group order (even, >= 4)
  std::vector<GroupSpec> factors; // direct_product: exactly two
  std::string path;               // from_file
  std::string name;

  // Order implied by the constructor, or -1 for file-backed groups.
  long long expected_order() const;
};

GroupSpec spec_cyclic(int n);
GroupSpec spec_dihedral(int order);
GroupSpec spec_symmetric(int n);
GroupSpec spec_alternating(int n);
GroupSpec spec_quaternion8();
GroupSpec spec_direct_product(GroupSpec a, GroupSpec b);
GroupSpec spec_from_file(std::string path);

// Parses the name grammar ("S3", "D12", "C2xC2xC3", "file:groups/g.grp").
// Factors of a product must be builtin atoms. Throws ParseError.
GroupSpec parse_group_name(const std::string& text);

// Builds the group, verifying the constructed order against the
// recipe's formula. Throws CapExceeded when the order or degree cap
// would be hit.
GroupTable build(const GroupSpec& spec, const Caps& caps = {});

// Presentation-style generator names usable in CLI element words:
// C: g; D: r, s; S/A: c (long cycle) and t/a; Q8: i, j. Empty for products
// and file groups.
std::vector<std::pair<std::string, Permutation>> named_generators(const GroupSpec& spec);

// Deterministic survey corpus: cyclic groups up to max_order, dihedral
// groups, S3/S4/A4/A5/Q8 when they fit, elementary abelian 2-groups up to
// order 16, and pairwise direct products of the above with nontrivial
// factors, deduplicated by name.
std::vector<GroupSpec> survey_corpus(int max_order);

}  // namespace permcheck
