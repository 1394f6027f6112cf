#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "permcheck/errors.hpp"
#include "permcheck/permutation.hpp"

namespace permcheck {

// A finite permutation group, fully expanded: an ordered element list with
// dense multiplication and inverse tables. Every other structure in the
// library (subgroups, product sets, lattices, quotients) indexes into one
// of these.
//
// Element ordering is deterministic: breadth-first closure starting at the
// identity, expanding each discovered element by right-multiplication with
// the generators in their input order. Identical generator lists therefore
// always produce identical tables, which keeps reports and golden files
// stable.
//
// Instances are immutable after construction and safe to share across
// threads.
class GroupTable {
 public:
  // Expands the group generated by `generators`. Throws CapExceeded when
  // more than `max_order` elements appear, std::invalid_argument on an
  // empty list or mixed degrees.
  static GroupTable closure(std::vector<Permutation> generators,
                            int max_order = Caps{}.max_group_order);

  // Assembles a table from prevalidated parts (quotients, subgroup
  // re-indexing). All table invariants are re-checked.
  static GroupTable from_parts(std::vector<Permutation> elements,
                               std::vector<int> mul, std::vector<int> inv,
                               std::vector<int> generator_indices);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }

  const Permutation& element(int i) const { return elements_[i]; }

  int mul(int i, int j) const { return mul_[static_cast<std::size_t>(i) * order() + j]; }
  int inv(int i) const { return inv_[i]; }

  // inv(by) * x * by
  int conjugate(int x, int by) const { return mul(mul(inv_[by], x), by); }

  // Smallest k >= 1 with element(i)^k = identity.
  int element_order(int i) const;

  const std::vector<int>& generator_indices() const { return gen_idx_; }

  // Index of `p` in the element list, or nullopt when `p` is not a member.
  // Throws std::invalid_argument when degrees differ.
  std::optional<int> element_index(const Permutation& p) const;

  bool is_abelian() const;

 private:
  GroupTable() = default;
  void finish_and_validate();

  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> gen_idx_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
};

}  // namespace permcheck
