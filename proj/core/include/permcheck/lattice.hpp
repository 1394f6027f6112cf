#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "permcheck/subgroup_set.hpp"

namespace permcheck {

// Smallest subgroup containing the elements indexed by `seed`. An empty
// seed yields the trivial subgroup.
SubgroupSet generated_subgroup(const GroupTable& g, const Bitset& seed);

// Join of two subgroups: generated_subgroup of their union.
SubgroupSet join_subgroups(const SubgroupSet& a, const SubgroupSet& b);

// The complete subgroup lattice of one group, in canonical order
// (ascending size, then lexicographically smallest member list), with
// per-subgroup normality and cyclicity flags.
class Lattice {
 public:
  int size() const { return static_cast<int>(subgroups_.size()); }
  const SubgroupSet& subgroup(int i) const { return subgroups_[i]; }
  bool normal(int i) const { return normal_[i] != 0; }
  bool cyclic(int i) const { return cyclic_[i] != 0; }

  const GroupTable& parent() const { return *parent_; }

  // Position of a subgroup bitset, or nullopt if it is not a subgroup.
  std::optional<int> find(const Bitset& members) const;

  int trivial_index() const { return 0; }
  int full_index() const { return size() - 1; }

  // All subgroups of order p^a where p^a is the largest power of p
  // dividing the group order. Throws std::invalid_argument when p does
  // not divide it.
  std::vector<int> sylow_subgroups(int p) const;

  // Subgroups whose order involves only the given primes and whose index
  // is coprime to all of them. May be empty.
  std::vector<int> hall_subgroups(const std::vector<int>& primes) const;

 private:
  friend Lattice all_subgroups(const GroupTable&, int);
  const GroupTable* parent_ = nullptr;
  std::vector<SubgroupSet> subgroups_;
  std::vector<char> normal_;
  std::vector<char> cyclic_;
  std::unordered_map<Bitset, int, BitsetHash> index_;
};

// Enumerates every subgroup: seeds with the cyclic subgroups, then joins
// lattice members with cyclic subgroups to a fixpoint. Every subgroup is
// the join of its cyclic subgroups, so this reaches all of them without a
// power-set scan. Throws CapExceeded when g.order() > lattice_cap.
Lattice all_subgroups(const GroupTable& g, int lattice_cap = Caps{}.max_lattice_order);

// True iff conjugating h by every generator of g maps h onto itself.
bool is_normal(const GroupTable& g, const SubgroupSet& h);

// Subgroup generated by all h^-1 k^-1 h k with h in H, k in K.
SubgroupSet commutator_subgroup(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& k);

// G >= G' >= G'' >= ... ; stops after the first repeated term (a perfect
// group ends [G, G]) or at the trivial subgroup.
std::vector<SubgroupSet> derived_series(const GroupTable& g);

// Smallest normal subgroup of `ambient` containing h (h must lie in
// ambient).
SubgroupSet normal_closure(const GroupTable& g, const SubgroupSet& ambient, const SubgroupSet& h);

// Normal-closure descent: repeatedly replace the ambient group by the
// normal closure of h inside it; h is subnormal iff the fixpoint is h.
bool is_subnormal(const GroupTable& g, const SubgroupSet& h);

SubgroupSet centralizer(const GroupTable& g, const SubgroupSet& h);
SubgroupSet normalizer(const GroupTable& g, const SubgroupSet& h);

// A subgroup re-indexed as a group in its own right. Elements keep their
// parent degree; local index i corresponds to parent index to_parent(i).
class SubgroupTable {
 public:
  const GroupTable& group() const { return *table_; }
  int to_parent(int local) const { return to_parent_[local]; }
  int to_local(int parent_index) const { return to_local_[parent_index]; }

  // Parent-side bitset -> local bitset (members must lie in the subgroup).
  Bitset lower(const Bitset& parent_side) const;
  // Local bitset -> parent-side bitset.
  Bitset lift(const Bitset& local) const;

 private:
  friend SubgroupTable subgroup_table(const GroupTable&, const SubgroupSet&);
  std::unique_ptr<GroupTable> table_;
  std::vector<int> to_parent_;
  std::vector<int> to_local_;
};

SubgroupTable subgroup_table(const GroupTable& g, const SubgroupSet& h);

std::vector<int> prime_divisors(int n);

}  // namespace permcheck
