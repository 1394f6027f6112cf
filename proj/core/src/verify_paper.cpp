#include "permcheck/verify_paper.hpp"

#include <algorithm>

#include "permcheck/survey.hpp"

namespace permcheck {

namespace {

struct Checker {
  std::vector<VerifyCheck> checks;

  void expect_bool(const std::string& id, bool expected, bool actual) {
    checks.push_back({id, expected ? "true" : "false", actual ? "true" : "false",
                      expected == actual});
  }

  void expect_int(const std::string& id, int expected, int actual) {
    checks.push_back({id, std::to_string(expected), std::to_string(actual), expected == actual});
  }

  void expect_str(const std::string& id, const std::string& expected, const std::string& actual) {
    checks.push_back({id, expected, actual, expected == actual});
  }
};

SubgroupSet span_of(const GroupTable& g, std::initializer_list<int> elements) {
  Bitset seed(g.order());
  for (int e : elements) seed.set(e);
  return generated_subgroup(g, seed);
}

int index_of(const GroupTable& g, const char* cycles) {
  return g.element_index(parse_cycles(cycles, g.degree())).value();
}

bool permutable_inside(const GroupTable& g, const SubgroupSet& h, const SubgroupSet& mid) {
  SubgroupTable st = subgroup_table(g, mid);
  Lattice inner = all_subgroups(st.group(), st.group().order());
  SubgroupSet local = SubgroupSet::from_closed_bitset(st.group(), st.lower(h.members()));
  return is_permutable(st.group(), local, inner);
}

void check_s3(Checker& c, const Caps& caps) {
  GroupTable g = build(spec_symmetric(3), caps);
  Lattice lat = all_subgroups(g, caps.max_lattice_order);

  SubgroupSet h = span_of(g, {index_of(g, "(1 2)")});
  SubgroupSet k = span_of(g, {index_of(g, "(1 3)")});
  SubgroupSet k23 = span_of(g, {index_of(g, "(2 3)")});

  c.expect_bool("e1-h-permutes-k", false, permutes(g, h, k));
  Perm4Verdict v = perm4(g, h, k);
  c.expect_bool("e1-perm4-h-k", true, v.holds);
  c.expect_int("e1-join-is-g", g.order(), v.join.size());
  c.expect_int("e1-hkhk-is-g", g.order(), v.product.size());
  c.expect_bool("e1-perm4-h-k23", true, perm4(g, h, k23).holds);

  bool all_sqn4 = true;
  for (int i = 0; i < lat.size(); ++i)
    all_sqn4 = all_sqn4 && is_sqn4(g, lat.subgroup(i), lat).holds;
  c.expect_bool("e1-all-subgroups-sqn4", true, all_sqn4);
}

void check_d12(Checker& c, const Caps& caps) {
  GroupSpec spec = spec_dihedral(12);
  GroupTable g = build(spec, caps);
  Lattice lat = all_subgroups(g, caps.max_lattice_order);

  auto named = named_generators(spec);
  int r = g.element_index(named[0].second).value();
  int s = g.element_index(named[1].second).value();
  int r2 = g.mul(r, r);
  int sr = g.mul(s, r);

  c.expect_bool("e2-pt-direct", true, is_pt_group(g, lat).holds);

  auto zw = zacher_witness(g, lat, caps);
  c.expect_int("e2-zacher-hall-order", 3, zw ? zw->hall.size() : 0);

  SubgroupSet h = span_of(g, {r2, s});
  c.expect_bool("e2-h-sqn4", true, is_sqn4(g, h, lat).holds);

  SubgroupSet k = span_of(g, {s});
  c.expect_bool("e2-k-sqn4-in-h", true, sqn4_in_subgroup(g, k, h));

  SubgroupSet m = span_of(g, {sr});
  c.expect_int("e2-kmkm-size", 8, perm4(g, k, m).product.size());
  c.expect_bool("e2-k-sqn4-in-g", false, is_sqn4(g, k, lat).holds);

  Sq4tVerdict sq = is_sq4t_group(g, lat);
  c.expect_bool("e2-sq4t", false, sq.holds);
  bool chain_valid = false;
  if (sq.violation) {
    const SubgroupChain& ch = *sq.violation;
    chain_valid = sqn4_in_subgroup(g, ch.inner, ch.mid) && is_sqn4(g, ch.mid, lat).holds &&
                  !is_sqn4(g, ch.inner, lat).holds;
  }
  c.expect_bool("e2-sq4t-counterexample-chain", true, chain_valid);
}

void check_d8(Checker& c, const Caps& caps) {
  GroupSpec spec = spec_dihedral(8);
  GroupTable g = build(spec, caps);
  Lattice lat = all_subgroups(g, caps.max_lattice_order);

  auto named = named_generators(spec);
  int r = g.element_index(named[0].second).value();
  int s = g.element_index(named[1].second).value();
  SubgroupSet inner = span_of(g, {s});
  SubgroupSet mid = span_of(g, {g.mul(r, r), s});

  c.expect_bool("ex2-s-permutable-in-mid", true, permutable_inside(g, inner, mid));
  c.expect_bool("ex2-mid-permutable-in-g", true, is_permutable(g, mid, lat));
  c.expect_bool("ex2-s-permutable-in-g", false, is_permutable(g, inner, lat));

  bool all_sqn4 = true;
  for (int i = 0; i < lat.size(); ++i)
    all_sqn4 = all_sqn4 && is_sqn4(g, lat.subgroup(i), lat).holds;
  c.expect_bool("ex2-all-subgroups-sqn4", true, all_sqn4);
  c.expect_bool("ex2-sq4t", true, is_sq4t_group(g, lat).holds);
  c.expect_bool("ex2-pt", false, is_pt_group(g, lat).holds);
}

void check_a5(Checker& c, const Caps& caps) {
  GroupTable g = build(spec_alternating(5), caps);
  Lattice lat = all_subgroups(g, caps.max_lattice_order);

  std::vector<int> permutables;
  for (int i = 0; i < lat.size(); ++i)
    if (is_permutable(g, lat.subgroup(i), lat)) permutables.push_back(lat.subgroup(i).size());
  std::string desc;
  for (std::size_t i = 0; i < permutables.size(); ++i)
    desc += (i ? "," : "") + std::to_string(permutables[i]);
  c.expect_str("ex3-a5-permutables", "1,60", desc);
  c.expect_bool("ex3-a5-pt", true, is_pt_group(g, lat).holds);
  c.expect_bool("ex3-a5-solvable", false, is_solvable(g));
}

void check_a4(Checker& c, const Caps& caps) {
  GroupTable g = build(spec_alternating(4), caps);
  Lattice lat = all_subgroups(g, caps.max_lattice_order);

  int normals = 0, order2 = 0, order3 = 0;
  for (int i = 0; i < lat.size(); ++i) {
    int sz = lat.subgroup(i).size();
    if (lat.normal(i)) ++normals;
    if (sz == 2) ++order2;
    if (sz == 3) ++order3;
  }
  c.expect_int("ex4-lattice-size", 10, lat.size());
  c.expect_int("ex4-w1-normals", 3, normals);
  c.expect_int("ex4-w2-order-2", 3, order2);
  c.expect_int("ex4-w3-order-3", 4, order3);

  SubgroupSet p = span_of(g, {index_of(g, "(1 2)(3 4)"), index_of(g, "(1 3)(2 4)")});
  bool comm2_trivial = true, comm3_is_p = true;
  for (int i = 0; i < lat.size(); ++i) {
    for (int j = 0; j < lat.size(); ++j) {
      if (i == j) continue;
      const SubgroupSet& a = lat.subgroup(i);
      const SubgroupSet& b = lat.subgroup(j);
      if (a.size() == 2 && b.size() == 2)
        comm2_trivial = comm2_trivial && commutator_subgroup(g, a, b).size() == 1;
      if (a.size() == 3 && b.size() == 3)
        comm3_is_p = comm3_is_p && commutator_subgroup(g, a, b).members() == p.members();
    }
  }
  c.expect_bool("ex4-commutator-h1h2-trivial", true, comm2_trivial);
  c.expect_bool("ex4-commutator-k1k2-is-p", true, comm3_is_p);

  bool all_sqn4 = true;
  for (int i = 0; i < lat.size(); ++i)
    all_sqn4 = all_sqn4 && is_sqn4(g, lat.subgroup(i), lat).holds;
  c.expect_bool("ex4-all-subgroups-sqn4", true, all_sqn4);
  c.expect_bool("ex4-sq4t", true, is_sq4t_group(g, lat).holds);
  c.expect_bool("ex4-supersolvable", false, is_supersolvable(g, caps));
}

void check_sweeps(Checker& c, const Caps& caps) {
  SurveyOptions opts;
  opts.max_order = 16;
  opts.caps = caps;
  SurveyResult sr = run_survey(opts);

  auto count_rule = [&](const std::string& prefix) {
    int n = 0;
    for (const auto& v : sr.violations)
      if (v.rule.rfind(prefix, 0) == 0) ++n;
    return n;
  };
  c.expect_int("lemma1-sweep-16-violations", 0, count_rule("lemma-1"));
  c.expect_int("lemma2-sweep-16-violations", 0, count_rule("lemma-2"));
  c.expect_int("lemma3-sweep-16-violations", 0, count_rule("lemma-3"));
  c.expect_int("prop1-sweep-16-violations", 0, count_rule("proposition-1"));
  c.expect_int("theorem-a-sweep-16-violations", 0, count_rule("theorem-a"));
}

}  // namespace

int VerifyPaperResult::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const VerifyCheck& c) { return c.pass; }));
}

int VerifyPaperResult::failed() const { return static_cast<int>(checks.size()) - passed(); }

VerifyPaperResult verify_paper(const Caps& caps) {
  Checker c;
  check_s3(c, caps);
  check_d12(c, caps);
  check_d8(c, caps);
  check_a5(c, caps);
  check_a4(c, caps);
  check_sweeps(c, caps);
  return VerifyPaperResult{std::move(c.checks)};
}

}  // namespace permcheck
