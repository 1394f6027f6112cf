#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permcheck/catalog.hpp"
#include "permcheck/classify.hpp"

using namespace permcheck;

namespace {

Permutation perm(const char* cycles, int degree) { return parse_cycles(cycles, degree); }

SubgroupSet span(const GroupTable& g, std::initializer_list<const char*> cycles) {
  Bitset seed(g.order());
  for (const char* c : cycles) seed.set(g.element_index(perm(c, g.degree())).value());
  return generated_subgroup(g, seed);
}

// Brute-force modular-law oracle working straight off subgroup bitsets.
bool modular_oracle(const GroupTable& g, const Lattice& lat) {
  for (int x = 0; x < lat.size(); ++x)
    for (int y = 0; y < lat.size(); ++y)
      for (int z = 0; z < lat.size(); ++z) {
        if (!lat.subgroup(x).members().subset_of(lat.subgroup(z).members())) continue;
        Bitset yz = lat.subgroup(y).members() & lat.subgroup(z).members();
        Bitset lhs = generated_subgroup(g, lat.subgroup(x).members() | yz).members();
        Bitset xy = generated_subgroup(g, lat.subgroup(x).members() | lat.subgroup(y).members()).members();
        Bitset rhs = xy & lat.subgroup(z).members();
        if (!(lhs == rhs)) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("solvability") {
  CHECK(is_solvable(build(spec_alternating(4))));
  CHECK(is_solvable(build(spec_cyclic(1))));
  CHECK(is_solvable(build(spec_dihedral(12))));
  CHECK(!is_solvable(build(spec_alternating(5))));
}

TEST_CASE("supersolvability") {
  CHECK(!is_supersolvable(build(spec_alternating(4))));
  CHECK(is_supersolvable(build(spec_cyclic(12))));
  CHECK(is_supersolvable(build(spec_symmetric(3))));
  CHECK(is_supersolvable(build(spec_dihedral(8))));
  CHECK(is_supersolvable(build(spec_quaternion8())));
  CHECK(is_supersolvable(build(spec_cyclic(1))));
}

TEST_CASE("nilpotency") {
  GroupTable d12 = build(spec_dihedral(12));
  SubgroupSet l = span(d12, {"(1 3 5)(2 4 6)"});
  QuotientMap q = quotient(d12, l);
  CHECK(is_nilpotent(q.group(), all_subgroups(q.group())));

  auto nilpotent = [](const GroupSpec& spec) {
    GroupTable g = build(spec);
    return is_nilpotent(g, all_subgroups(g));
  };
  CHECK(nilpotent(spec_cyclic(12)));
  CHECK(!nilpotent(spec_symmetric(3)));
  CHECK(nilpotent(spec_dihedral(8)));
  CHECK(!is_nilpotent(d12, all_subgroups(d12)));
}

TEST_CASE("modular subgroup lattices") {
  for (const char* name : {"C2xC2", "C12", "A4", "D8", "Q8", "S3"}) {
    GroupTable g = build(parse_group_name(name));
    Lattice lat = all_subgroups(g);
    CHECK(is_modular_lattice(g, lat) == modular_oracle(g, lat));
  }
  // Frozen verdicts: abelian and Hamiltonian lattices are modular, A4 and
  // D8 are not.
  auto verdict = [](const char* name) {
    GroupTable g = build(parse_group_name(name));
    return is_modular_lattice(g, all_subgroups(g));
  };
  CHECK(verdict("C2xC2"));
  CHECK(verdict("C12"));
  CHECK(verdict("Q8"));
  CHECK(!verdict("A4"));
  CHECK(!verdict("D8"));
}

TEST_CASE("PT verdicts") {
  GroupTable d12 = build(spec_dihedral(12));
  CHECK(is_pt_group(d12, all_subgroups(d12)).holds);

  GroupTable d8 = build(spec_dihedral(8));
  Lattice d8lat = all_subgroups(d8);
  PtVerdict v = is_pt_group(d8, d8lat);
  CHECK(!v.holds);
  REQUIRE(v.violation.has_value());
  CHECK(v.violation->inner.members() == span(d8, {"(2 4)"}).members());
  CHECK(v.violation->mid.members() == span(d8, {"(2 4)", "(1 3)(2 4)"}).members());
  // The chain really violates transitivity.
  CHECK(!is_permutable(d8, v.violation->inner, d8lat));
  CHECK(is_permutable(d8, v.violation->mid, d8lat));

  GroupTable a5 = build(spec_alternating(5));
  CHECK(is_pt_group(a5, all_subgroups(a5)).holds);

  GroupTable a4 = build(spec_alternating(4));
  PtVerdict va4 = is_pt_group(a4, all_subgroups(a4));
  CHECK(!va4.holds);
  REQUIRE(va4.violation.has_value());
  CHECK(va4.violation->inner.size() == 2);
  CHECK(va4.violation->mid.size() == 4);
}

TEST_CASE("Sq4T verdicts") {
  GroupTable d12 = build(spec_dihedral(12));
  Lattice lat = all_subgroups(d12);
  Sq4tVerdict v = is_sq4t_group(d12, lat);
  CHECK(!v.holds);
  REQUIRE(v.violation.has_value());
  // The canonical counterexample chain is <s> <= <r^2, s>.
  CHECK(v.violation->inner.members() == span(d12, {"(2 6)(3 5)"}).members());
  CHECK(v.violation->mid.members() ==
        span(d12, {"(1 3 5)(2 4 6)", "(2 6)(3 5)"}).members());
  CHECK(sqn4_in_subgroup(d12, v.violation->inner, v.violation->mid));
  CHECK(is_sqn4(d12, v.violation->mid, lat).holds);
  CHECK(!is_sqn4(d12, v.violation->inner, lat).holds);

  auto sq4t = [](const GroupSpec& spec) {
    GroupTable g = build(spec);
    return is_sq4t_group(g, all_subgroups(g)).holds;
  };
  CHECK(sq4t(spec_alternating(4)));
  CHECK(sq4t(spec_dihedral(8)));
  CHECK(sq4t(spec_cyclic(1)));
}

TEST_CASE("Zacher witnesses") {
  GroupTable d12 = build(spec_dihedral(12));
  auto w = zacher_witness(d12, all_subgroups(d12));
  REQUIRE(w.has_value());
  CHECK(w->hall.size() == 3);
  CHECK(w->hall.members() == span(d12, {"(1 3 5)(2 4 6)"}).members());
  CHECK(w->quotient_nilpotent);
  CHECK(w->quotient_modular);
  CHECK(w->power_automorphisms);

  GroupTable c9 = build(spec_cyclic(9));
  auto w9 = zacher_witness(c9, all_subgroups(c9));
  REQUIRE(w9.has_value());
  CHECK(w9->hall.size() == 9);  // the whole group, largest candidate first

  GroupTable s3g = build(spec_symmetric(3));
  auto ws3 = zacher_witness(s3g, all_subgroups(s3g));
  REQUIRE(ws3.has_value());
  CHECK(ws3->hall.size() == 3);

  auto witness_exists = [](const GroupSpec& spec) {
    GroupTable g = build(spec);
    return zacher_witness(g, all_subgroups(g)).has_value();
  };
  CHECK(!witness_exists(spec_alternating(4)));
  CHECK(!witness_exists(spec_dihedral(8)));
}

TEST_CASE("classification reports") {
  ClassificationReport a4 = classify(build(spec_alternating(4)), "A4");
  CHECK(a4.order == 12);
  CHECK(a4.num_subgroups == 10);
  CHECK(a4.solvable);
  CHECK(!a4.supersolvable);
  CHECK(a4.sq4t);
  CHECK(!a4.pt);
  CHECK(!a4.abelian);
  CHECK(!a4.nilpotent);

  ClassificationReport a5 = classify(build(spec_alternating(5)), "A5");
  CHECK(!a5.solvable);
  CHECK(a5.pt);
  CHECK(!a5.sq4t);

  ClassificationReport c1 = classify(build(spec_cyclic(1)), "C1");
  CHECK(c1.abelian);
  CHECK(c1.nilpotent);
  CHECK(c1.solvable);
  CHECK(c1.supersolvable);
  CHECK(c1.pt);
  CHECK(c1.sq4t);

  ClassificationReport d12 = classify(build(spec_dihedral(12)), "D12");
  CHECK(d12.pt);
  CHECK(!d12.sq4t);
  REQUIRE(d12.witnesses.size() == 1);
  CHECK(d12.witnesses[0].subgroups.size() == 2);
}

TEST_CASE("implication guard fires on inconsistent flags") {
  ClassificationReport bogus;
  bogus.group_name = "bogus";
  bogus.abelian = true;
  bogus.nilpotent = false;
  CHECK_THROWS_AS(bogus.assert_implications(), std::logic_error);

  bogus.nilpotent = true;
  bogus.supersolvable = true;
  bogus.solvable = false;
  CHECK_THROWS_AS(bogus.assert_implications(), std::logic_error);
}

TEST_CASE("classify respects the lattice cap") {
  Caps caps;
  caps.max_lattice_order = 10;
  CHECK_THROWS_AS(classify(build(spec_alternating(4)), "A4", caps), CapExceeded);
}
