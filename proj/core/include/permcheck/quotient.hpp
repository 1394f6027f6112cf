#pragma once

#include <memory>
#include <vector>

#include "permcheck/subgroup_set.hpp"

namespace permcheck {

// G/N for a normal subgroup N, realized as a GroupTable in its own right:
// cosets are relabeled 0..k-1 with the identity coset first (cosets ordered
// by their smallest parent element index), and each coset becomes the
// permutation of coset labels given by left translation. Downstream code
// can therefore treat a quotient exactly like any other group.
class QuotientMap {
 public:
  const GroupTable& parent() const { return *parent_; }
  const GroupTable& group() const { return *quotient_; }
  const SubgroupSet& kernel() const { return kernel_; }

  int coset_of(int parent_index) const { return coset_of_[parent_index]; }
  int representative(int coset) const { return reps_[coset]; }

  // Image of a subgroup of the parent in the quotient.
  SubgroupSet image(const SubgroupSet& h) const;

 private:
  friend QuotientMap quotient(const GroupTable&, const SubgroupSet&);
  QuotientMap(const GroupTable& g, SubgroupSet kernel)
      : parent_(&g), kernel_(std::move(kernel)) {}

  const GroupTable* parent_;
  SubgroupSet kernel_;
  std::vector<int> coset_of_;
  std::vector<int> reps_;
  std::unique_ptr<GroupTable> quotient_;
};

// Throws std::invalid_argument when `kernel` is not a subgroup of g or not
// normal in g.
QuotientMap quotient(const GroupTable& g, const SubgroupSet& kernel);

}  // namespace permcheck
