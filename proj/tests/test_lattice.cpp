#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "permcheck/catalog.hpp"
#include "permcheck/lattice.hpp"

using namespace permcheck;

namespace {

Permutation perm(const char* cycles, int degree) { return parse_cycles(cycles, degree); }

SubgroupSet span(const GroupTable& g, std::initializer_list<const char*> cycles) {
  Bitset seed(g.order());
  for (const char* c : cycles) seed.set(g.element_index(perm(c, g.degree())).value());
  return generated_subgroup(g, seed);
}

std::map<int, int> size_histogram(const Lattice& lat) {
  std::map<int, int> hist;
  for (int i = 0; i < lat.size(); ++i) ++hist[lat.subgroup(i).size()];
  return hist;
}

void check_against_powerset_oracle(const GroupTable& g) {
  Lattice lat = all_subgroups(g);
  auto expected = oracle::powerset_subgroups(g);
  REQUIRE(lat.size() == static_cast<int>(expected.size()));
  for (int i = 0; i < lat.size(); ++i)
    CHECK(lat.subgroup(i).members().to_indices() == expected[i]);
}

}  // namespace

TEST_CASE("generated_subgroup matches composition-based closure") {
  GroupTable g = build(spec_symmetric(3));
  SubgroupSet whole = span(g, {"(1 2)", "(1 3)"});
  CHECK(whole.size() == 6);  // two transpositions generate all of S3

  CHECK(generated_subgroup(g, Bitset(g.order())).size() == 1);  // empty seed

  GroupTable a4 = build(spec_alternating(4));
  SubgroupSet p = span(a4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(p.size() == 4);

  // Cross-check against the oracle that never touches the table.
  auto expected = oracle::naive_generated({perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)}, 4);
  CHECK(oracle::to_perm_set(a4, p.members()) == expected);
}

TEST_CASE("subgroup counts for the worked groups") {
  GroupTable s3g = build(spec_symmetric(3));
  CHECK(all_subgroups(s3g).size() == 6);
  GroupTable c1 = build(spec_cyclic(1));
  CHECK(all_subgroups(c1).size() == 1);

  GroupTable a4g = build(spec_alternating(4));
  Lattice a4 = all_subgroups(a4g);
  CHECK(a4.size() == 10);
  std::map<int, int> hist = size_histogram(a4);
  CHECK(hist[1] == 1);
  CHECK(hist[2] == 3);
  CHECK(hist[3] == 4);
  CHECK(hist[4] == 1);
  CHECK(hist[12] == 1);
}

TEST_CASE("A5 has 59 subgroups") {
  GroupTable g = build(spec_alternating(5));
  Lattice lat = all_subgroups(g);
  CHECK(lat.size() == 59);
}

TEST_CASE("lattice matches the power-set oracle on small groups") {
  check_against_powerset_oracle(build(spec_symmetric(3)));
  check_against_powerset_oracle(build(spec_dihedral(8)));
  check_against_powerset_oracle(build(spec_quaternion8()));
  check_against_powerset_oracle(build(spec_cyclic(12)));
  check_against_powerset_oracle(build(spec_alternating(4)));
}

TEST_CASE("lattice structural invariants") {
  GroupTable g = build(spec_dihedral(12));
  Lattice lat = all_subgroups(g);

  CHECK(lat.subgroup(lat.trivial_index()).size() == 1);
  CHECK(lat.subgroup(lat.full_index()).size() == g.order());

  std::set<std::vector<int>> seen;
  for (int i = 0; i < lat.size(); ++i) {
    const SubgroupSet& s = lat.subgroup(i);
    CHECK(g.order() % s.size() == 0);  // Lagrange
    CHECK(seen.insert(s.members().to_indices()).second);

    // Closed under conjugation: every conjugate is listed.
    for (int t = 0; t < g.order(); ++t) {
      Bitset conj(g.order());
      s.members().for_each([&](int x) { conj.set(g.conjugate(x, t)); });
      CHECK(lat.find(conj).has_value());
    }

    if (i > 0) {
      bool ordered = lat.subgroup(i - 1).size() < s.size() ||
                     (lat.subgroup(i - 1).size() == s.size() &&
                      Bitset::compare_members(lat.subgroup(i - 1).members(), s.members()) < 0);
      CHECK(ordered);
    }
  }
}

TEST_CASE("lattice enumeration respects the cap") {
  GroupTable g = build(spec_symmetric(4));
  CHECK_THROWS_AS(all_subgroups(g, 20), CapExceeded);
}

TEST_CASE("normality") {
  GroupTable a4 = build(spec_alternating(4));
  SubgroupSet p = span(a4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(is_normal(a4, p));
  CHECK(is_normal(a4, full_subgroup(a4)));
  CHECK(is_normal(a4, trivial_subgroup(a4)));

  GroupTable g = build(spec_symmetric(3));
  CHECK(!is_normal(g, span(g, {"(1 2)"})));
}

TEST_CASE("commutator subgroups in A4") {
  GroupTable g = build(spec_alternating(4));
  SubgroupSet p = span(g, {"(1 2)(3 4)", "(1 3)(2 4)"});

  SubgroupSet k1 = span(g, {"(1 2 3)"});
  SubgroupSet k2 = span(g, {"(1 2 4)"});
  CHECK(commutator_subgroup(g, k1, k2).members() == p.members());

  SubgroupSet h1 = span(g, {"(1 2)(3 4)"});
  SubgroupSet h2 = span(g, {"(1 3)(2 4)"});
  CHECK(commutator_subgroup(g, h1, h2).size() == 1);

  CHECK(commutator_subgroup(g, p, trivial_subgroup(g)).size() == 1);
}

TEST_CASE("derived series") {
  auto sizes = [](const std::vector<SubgroupSet>& series) {
    std::vector<int> out;
    for (const auto& s : series) out.push_back(s.size());
    return out;
  };
  CHECK(sizes(derived_series(build(spec_symmetric(3)))) == std::vector<int>{6, 3, 1});
  CHECK(sizes(derived_series(build(spec_cyclic(6)))) == std::vector<int>{6, 1});
  CHECK(sizes(derived_series(build(spec_alternating(5)))) == std::vector<int>{60, 60});
  CHECK(sizes(derived_series(build(spec_cyclic(1)))) == std::vector<int>{1});
  CHECK(sizes(derived_series(build(spec_alternating(4)))) == std::vector<int>{12, 4, 1});
}

TEST_CASE("Sylow subgroups") {
  GroupTable s3g = build(spec_symmetric(3));
  Lattice s3lat = all_subgroups(s3g);
  auto syl3 = s3lat.sylow_subgroups(3);
  REQUIRE(syl3.size() == 1);
  CHECK(s3lat.subgroup(syl3[0]).size() == 3);

  GroupTable a4 = build(spec_alternating(4));
  Lattice a4lat = all_subgroups(a4);
  auto syl2 = a4lat.sylow_subgroups(2);
  REQUIRE(syl2.size() == 1);
  CHECK(a4lat.subgroup(syl2[0]).size() == 4);
  CHECK(a4lat.normal(syl2[0]));

  GroupTable d12 = build(spec_dihedral(12));
  Lattice d12lat = all_subgroups(d12);
  auto syl2d = d12lat.sylow_subgroups(2);
  CHECK(syl2d.size() == 3);
  for (int i : syl2d) CHECK(d12lat.subgroup(i).size() == 4);

  CHECK_THROWS_AS(s3lat.sylow_subgroups(5), std::invalid_argument);
}

TEST_CASE("Hall subgroups") {
  GroupTable d12 = build(spec_dihedral(12));
  Lattice lat = all_subgroups(d12);

  auto hall3 = lat.hall_subgroups({3});
  REQUIRE(hall3.size() == 1);
  const SubgroupSet& l = lat.subgroup(hall3[0]);
  CHECK(l.size() == 3);
  CHECK(l.members() == span(d12, {"(1 3 5)(2 4 6)"}).members());  // <r^2>

  auto all_primes = lat.hall_subgroups({2, 3});
  REQUIRE(all_primes.size() == 1);
  CHECK(lat.subgroup(all_primes[0]).size() == 12);

  GroupTable s3g = build(spec_symmetric(3));
  CHECK(all_subgroups(s3g).hall_subgroups({2}).size() == 3);
}

TEST_CASE("subnormality by normal-closure descent") {
  GroupTable g = build(spec_symmetric(3));
  CHECK(is_subnormal(g, full_subgroup(g)));
  CHECK(is_subnormal(g, trivial_subgroup(g)));
  CHECK(!is_subnormal(g, span(g, {"(1 2)"})));

  GroupTable d8 = build(spec_dihedral(8));
  CHECK(is_subnormal(d8, span(d8, {"(2 4)"})));  // <s> <| <r^2,s> <| D8
}

TEST_CASE("centralizer and normalizer") {
  GroupTable g = build(spec_symmetric(3));
  SubgroupSet h = span(g, {"(1 2)"});
  CHECK(normalizer(g, h).members() == h.members());  // self-normalizing

  GroupTable a4 = build(spec_alternating(4));
  SubgroupSet p = span(a4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(normalizer(a4, p).size() == 12);
  CHECK(centralizer(a4, p).members() == p.members());
  CHECK(centralizer(g, trivial_subgroup(g)).size() == g.order());
}

TEST_CASE("subgroup tables") {
  GroupTable d12 = build(spec_dihedral(12));
  SubgroupSet mid = span(d12, {"(1 3 5)(2 4 6)", "(2 6)(3 5)"});  // <r^2, s>
  REQUIRE(mid.size() == 6);

  SubgroupTable st = subgroup_table(d12, mid);
  CHECK(st.group().order() == 6);
  CHECK(!st.group().is_abelian());  // it is an S3 copy

  for (int i = 0; i < st.group().order(); ++i) {
    CHECK(st.to_local(st.to_parent(i)) == i);
    for (int j = 0; j < st.group().order(); ++j)
      CHECK(st.to_parent(st.group().mul(i, j)) == d12.mul(st.to_parent(i), st.to_parent(j)));
  }

  Bitset local = st.lower(mid.members());
  CHECK(local.count() == 6);
  CHECK(st.lift(local) == mid.members());
}
