#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permcheck/lattice.hpp"
#include "permcheck/permutability.hpp"
#include "permcheck/quotient.hpp"

namespace permcheck {

// True iff the derived series reaches the trivial subgroup.
bool is_solvable(const GroupTable& g);

// Recursive: trivial, or some normal subgroup of prime order with a
// supersolvable quotient. Quotients recur, so verdicts are memoized per
// multiplication table within one call.
bool is_supersolvable(const GroupTable& g, const Caps& caps = {});

// Finite-group criterion: every Sylow subgroup is normal.
bool is_nilpotent(const GroupTable& g, const Lattice& lattice);

// Modular law over all subgroup triples X <= Z:
// <X, Y meet Z> = <X, Y> meet Z.
bool is_modular_lattice(const GroupTable& g, const Lattice& lattice);

// A violating transitivity chain: inner <= mid <= G where `inner` has the
// property inside `mid` and `mid` has it in G, but `inner` does not have
// it in G.
struct SubgroupChain {
  SubgroupSet inner;
  SubgroupSet mid;
};

struct PtVerdict {
  bool holds;
  std::optional<SubgroupChain> violation;
};

// PT: whenever H is permutable in G and K is permutable in H (decided on
// H's own table), K is permutable in G.
PtVerdict is_pt_group(const GroupTable& g, const Lattice& lattice);

struct Sq4tVerdict {
  bool holds;
  std::optional<SubgroupChain> violation;
};

// Sq4T: whenever H sqn4 K (on K's own table) and K sqn4 G, H sqn4 G.
// Outer loop over K by descending size, inner over the subgroups of K in
// canonical order; the first violating chain is returned.
Sq4tVerdict is_sq4t_group(const GroupTable& g, const Lattice& lattice);

struct ZacherWitness {
  SubgroupSet hall;  // normal abelian Hall subgroup of odd order
  bool quotient_nilpotent;
  bool quotient_modular;
  bool power_automorphisms;
};

// Searches normal abelian odd-order Hall subgroups L (largest first) for
// one where G/L is nilpotent with modular subgroup lattice and every
// conjugation maps each x in L into <x>.
std::optional<ZacherWitness> zacher_witness(const GroupTable& g, const Lattice& lattice,
                                            const Caps& caps = {});

struct WitnessEntry {
  std::string claim;
  std::vector<SubgroupSet> subgroups;
  std::string verdict;
};

struct ClassificationReport {
  std::string group_name;
  int order = 0;
  int num_subgroups = 0;
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  bool supersolvable = false;
  bool pt = false;
  bool sq4t = false;
  std::vector<WitnessEntry> witnesses;
  std::map<std::string, double> elapsed_ms;

  // abelian => nilpotent => supersolvable => solvable are forced; a
  // violation is an engine bug and throws std::logic_error.
  void assert_implications() const;
};

ClassificationReport classify(const GroupTable& g, std::string name, const Caps& caps = {});

}  // namespace permcheck
