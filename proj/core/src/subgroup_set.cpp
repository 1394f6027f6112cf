#include "permcheck/subgroup_set.hpp"

#include <stdexcept>

namespace permcheck {

bool is_subgroup_set(const GroupTable& g, const Bitset& members) {
  if (members.universe_size() != g.order()) return false;
  if (!members.test(0)) return false;
  bool ok = true;
  members.for_each([&](int i) {
    if (!members.test(g.inv(i))) ok = false;
    members.for_each([&](int j) {
      if (!members.test(g.mul(i, j))) ok = false;
    });
  });
  return ok;
}

SubgroupSet SubgroupSet::from_closed_bitset(const GroupTable& g, Bitset members) {
  return SubgroupSet(g, std::move(members));
}

SubgroupSet SubgroupSet::checked(const GroupTable& g, const Bitset& members) {
  if (!is_subgroup_set(g, members))
    throw std::invalid_argument("element set is not a subgroup");
  return SubgroupSet(g, members);
}

SubgroupSet trivial_subgroup(const GroupTable& g) {
  Bitset b(g.order());
  b.set(0);
  return SubgroupSet::from_closed_bitset(g, std::move(b));
}

SubgroupSet full_subgroup(const GroupTable& g) {
  Bitset b(g.order());
  for (int i = 0; i < g.order(); ++i) b.set(i);
  return SubgroupSet::from_closed_bitset(g, std::move(b));
}

}  // namespace permcheck
