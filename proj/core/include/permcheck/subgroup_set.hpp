#pragma once

#include "permcheck/bitset.hpp"
#include "permcheck/group_table.hpp"

namespace permcheck {

// An arbitrary set of element indices of one group. Product sets such as
// HK or HKHK live here; no closure is implied.
struct ElementSet {
  const GroupTable* parent = nullptr;
  Bitset members;

  int size() const { return members.count(); }
};

// A set of element indices that is an actual subgroup: contains the
// identity and is closed under multiplication and inversion. Only trusted
// factories construct these; `checked` revalidates untrusted bitsets.
//
// Holds a non-owning pointer to its group, which must stay alive (and at a
// stable address) for as long as the set is used.
class SubgroupSet {
 public:
  const GroupTable& parent() const { return *parent_; }
  const Bitset& members() const { return members_; }
  int size() const { return size_; }
  bool contains(int element) const { return members_.test(element); }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

  // Trusted factory: `members` is already known to be closed.
  static SubgroupSet from_closed_bitset(const GroupTable& g, Bitset members);

  // Validating factory; throws std::invalid_argument when `members` is not
  // a subgroup of `g`.
  static SubgroupSet checked(const GroupTable& g, const Bitset& members);

 private:
  SubgroupSet(const GroupTable& g, Bitset members)
      : parent_(&g), members_(std::move(members)), size_(members_.count()) {}

  const GroupTable* parent_;
  Bitset members_;
  int size_;
};

bool is_subgroup_set(const GroupTable& g, const Bitset& members);

SubgroupSet trivial_subgroup(const GroupTable& g);
SubgroupSet full_subgroup(const GroupTable& g);

// Canonical order used everywhere subgroups are listed: ascending size,
// then lexicographically smallest member list.
struct SubgroupCanonicalLess {
  bool operator()(const SubgroupSet& a, const SubgroupSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return Bitset::compare_members(a.members(), b.members()) < 0;
  }
};

}  // namespace permcheck
