// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 6 and 9 also drive the installed CLI binary (path
// from PERMCHECK_CLI, overridable as argv[1]).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "permcheck/reporting.hpp"
#include "permcheck/survey.hpp"

using namespace permcheck;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& line) { g_notes.push_back(line); }

void require(bool ok, const std::string& what) {
  if (!ok) {
    note("requirement failed: " + what);
    throw std::runtime_error(what);
  }
}

void criterion(int number, const std::string& title, double budget_ms,
               const std::function<void()>& body) {
  g_notes.clear();
  auto t0 = clock_type::now();
  bool ok = true;
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    ok = false;
    error = e.what();
  }
  double ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
  if (ok && budget_ms > 0 && ms > budget_ms) {
    ok = false;
    error = "exceeded runtime budget: " + std::to_string(ms) + " ms > " +
            std::to_string(budget_ms) + " ms";
  }
  std::printf("[%s] criterion %d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", number, title.c_str(), ms);
  if (!ok) {
    ++g_failures;
    std::printf("       %s\n", error.c_str());
    for (const auto& n : g_notes) std::printf("       %s\n", n.c_str());
  }
}

SubgroupSet span(const GroupTable& g, std::initializer_list<const char*> cycles) {
  Bitset seed(g.order());
  for (const char* c : cycles) seed.set(g.element_index(parse_cycles(c, g.degree())).value());
  return generated_subgroup(g, seed);
}

std::string cli_path = "";

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  std::string cmd = cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[8192];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// --- criteria ---------------------------------------------------------

void criterion1_s3() {
  GroupTable g = build(spec_symmetric(3));
  Lattice lat = all_subgroups(g);
  SubgroupSet h = span(g, {"(1 2)"});
  SubgroupSet k = span(g, {"(1 3)"});

  require(!permutes(g, h, k), "H and K must not permute");
  Perm4Verdict v = perm4(g, h, k);
  require(v.holds, "perm4(H, K) must hold");
  require(v.join.size() == 6 && v.product.size() == 6, "join and product must equal S3 exactly");
  require(v.join.members() == full_subgroup(g).members(), "join must be all of S3");
  require(v.product.members == full_subgroup(g).members(), "HKHK must be all of S3");

  for (int i = 0; i < lat.size(); ++i)
    require(is_sqn4(g, lat.subgroup(i), lat).holds,
            "every subgroup of S3 must be sqn4 (failed at index " + std::to_string(i) + ")");
}

void criterion2_d12() {
  GroupTable g = build(spec_dihedral(12));
  Lattice lat = all_subgroups(g);
  auto named = named_generators(spec_dihedral(12));
  int r = g.element_index(named[0].second).value();
  int s = g.element_index(named[1].second).value();

  require(is_pt_group(g, lat).holds, "D12 must be a PT-group by the direct definition");

  auto zw = zacher_witness(g, lat);
  require(zw.has_value() && zw->hall.size() == 3, "Zacher witness L of order 3 must exist");

  Bitset seed(g.order());
  seed.set(g.mul(r, r));
  seed.set(s);
  SubgroupSet h = generated_subgroup(g, seed);
  require(h.size() == 6, "<r^2, s> must have order 6");
  require(is_sqn4(g, h, lat).holds, "<r^2, s> must be sqn4 in D12");

  Bitset kb(g.order());
  kb.set(s);
  SubgroupSet k = generated_subgroup(g, kb);
  Bitset mb(g.order());
  mb.set(g.mul(s, r));
  SubgroupSet m = generated_subgroup(g, mb);
  require(perm4(g, k, m).product.size() == 8, "|KMKM| must be exactly 8");

  Sq4tVerdict sq = is_sq4t_group(g, lat);
  require(!sq.holds, "D12 must not be an Sq4T-group");
  require(sq.violation.has_value(), "a counterexample chain must be produced");
  require(sqn4_in_subgroup(g, sq.violation->inner, sq.violation->mid),
          "chain: inner must be sqn4 in mid");
  require(is_sqn4(g, sq.violation->mid, lat).holds, "chain: mid must be sqn4 in G");
  require(!is_sqn4(g, sq.violation->inner, lat).holds, "chain: inner must not be sqn4 in G");
}

void criterion3_d8() {
  GroupTable g = build(spec_dihedral(8));
  Lattice lat = all_subgroups(g);
  SubgroupSet s = span(g, {"(2 4)"});
  SubgroupSet mid = span(g, {"(2 4)", "(1 3)(2 4)"});  // <r^2, s>
  require(mid.size() == 4, "<r^2, s> must have order 4");

  SubgroupTable st = subgroup_table(g, mid);
  Lattice inner = all_subgroups(st.group());
  SubgroupSet s_local = SubgroupSet::from_closed_bitset(st.group(), st.lower(s.members()));
  require(is_permutable(st.group(), s_local, inner), "<s> must be permutable in <r^2, s>");
  require(is_permutable(g, mid, lat), "<r^2, s> must be permutable in D8");
  require(!is_permutable(g, s, lat), "<s> must not be permutable in D8");

  for (int i = 0; i < lat.size(); ++i)
    require(is_sqn4(g, lat.subgroup(i), lat).holds, "every subgroup of D8 must be sqn4");
  require(is_sq4t_group(g, lat).holds, "D8 must be an Sq4T-group");
  require(!is_pt_group(g, lat).holds, "D8 must not be a PT-group");
}

void criterion4_a4() {
  GroupTable g = build(spec_alternating(4));
  Lattice lat = all_subgroups(g);
  require(lat.size() == 10, "A4 must have exactly 10 subgroups");

  int normals = 0, order2 = 0, order3 = 0;
  for (int i = 0; i < lat.size(); ++i) {
    if (lat.normal(i)) ++normals;
    if (lat.subgroup(i).size() == 2) ++order2;
    if (lat.subgroup(i).size() == 3) ++order3;
  }
  require(normals == 3 && order2 == 3 && order3 == 4,
          "lattice must split 3 normals / 3 of order 2 / 4 of order 3");
  require(normals + order2 + order3 == lat.size(), "the three families must cover the lattice");

  SubgroupSet p = span(g, {"(1 2)(3 4)", "(1 3)(2 4)"});
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j) {
      if (i == j) continue;
      const SubgroupSet& a = lat.subgroup(i);
      const SubgroupSet& b = lat.subgroup(j);
      if (a.size() == 3 && b.size() == 3)
        require(commutator_subgroup(g, a, b).members() == p.members(),
                "commutator of distinct order-3 subgroups must be P");
      if (a.size() == 2 && b.size() == 2)
        require(commutator_subgroup(g, a, b).size() == 1,
                "commutator of distinct order-2 subgroups must be trivial");
    }

  require(is_sq4t_group(g, lat).holds, "A4 must be an Sq4T-group");
  require(!is_supersolvable(g), "A4 must not be supersolvable");
  require(is_solvable(g), "A4 must be solvable");
}

void criterion5_a5() {
  GroupTable g = build(spec_alternating(5));
  Lattice lat = all_subgroups(g);
  require(lat.size() == 59, "A5 must have exactly 59 subgroups");

  // Independent oracle: subgroups from generated pairs, closed under
  // conjugation.
  auto expected = oracle::pair_generated_subgroups(g);
  require(static_cast<int>(expected.size()) == lat.size(),
          "pair-generated oracle must agree on the subgroup count");
  for (int i = 0; i < lat.size(); ++i) {
    bool found = false;
    for (const auto& sub : expected)
      found = found || sub == lat.subgroup(i).members().to_indices();
    require(found, "lattice member missing from the oracle enumeration");
  }

  for (int i = 0; i < lat.size(); ++i) {
    bool expected_perm = lat.subgroup(i).size() == 1 || lat.subgroup(i).size() == 60;
    require(is_permutable(g, lat.subgroup(i), lat) == expected_perm,
            "permutable subgroups of A5 must be exactly 1 and A5");
  }
  require(is_pt_group(g, lat).holds, "A5 must be a PT-group");
  require(!is_solvable(g), "A5 must not be solvable");
  require(!is_sq4t_group(g, lat).holds, "A5 must not be an Sq4T-group");
}

SurveyResult g_survey24;  // shared by criteria 6-8

void criterion6_sweeps() {
  SurveyOptions opts;
  opts.max_order = 24;
  g_survey24 = run_survey(opts);
  for (const auto& row : g_survey24.rows)
    require(row.error.empty(), "group " + row.name + " failed: " + row.error);

  const char* rules[] = {"lemma-1.1", "lemma-1.2", "lemma-1.3", "lemma-2",   "lemma-3",
                         "permutable-implies-sqn4", "ore-subnormal", "product-formula",
                         "lagrange", "hkhk-in-join", "theorem-a"};
  for (const char* rule : rules) {
    for (const auto& v : g_survey24.violations)
      if (v.rule == rule)
        require(false, std::string("violation of ") + rule + " in " + v.group + ": " + v.detail);
  }

  CliRun cli = run_cli("survey --max-order 24 --format json");
  require(cli.exit_code == 0, "CLI survey must exit 0, got " + std::to_string(cli.exit_code));
}

void criterion7_proposition1() {
  require(!g_survey24.rows.empty(), "criterion 6 must have produced the survey");
  for (const auto& v : g_survey24.violations)
    if (v.rule == "proposition-1")
      require(false, "proposition-1 violated in " + v.group + ": " + v.detail);
}

void criterion8_oracle() {
  for (const auto& spec : survey_corpus(24)) {
    GroupTable g = build(spec);
    if (g.order() > 16) continue;
    Lattice lat = all_subgroups(g);
    auto expected = oracle::powerset_subgroups(g);
    require(lat.size() == static_cast<int>(expected.size()),
            spec.name + ": subgroup count differs from the power-set oracle");
    for (int i = 0; i < lat.size(); ++i)
      require(lat.subgroup(i).members().to_indices() == expected[i],
              spec.name + ": lattice member differs from the power-set oracle");
  }
}

void criterion9_determinism() {
  CliRun a = run_cli("survey --max-order 24 --format json");
  CliRun b = run_cli("survey --max-order 24 --format json");
  require(a.exit_code == 0 && b.exit_code == 0, "both survey runs must exit 0");
  require(!a.output.empty(), "survey output must be nonempty");
  require(a.output == b.output, "consecutive survey runs must be byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
#ifdef PERMCHECK_CLI
  cli_path = PERMCHECK_CLI;
#endif
  if (argc > 1) cli_path = argv[1];
  if (cli_path.empty()) {
    std::cerr << "usage: acceptance <path-to-permcheck-cli>\n";
    return 2;
  }

  criterion(1, "S3 transposition pair: perm4 without permuting; all subgroups sqn4", 1000,
            criterion1_s3);
  criterion(2, "D12: PT with Zacher witness, <r^2,s> sqn4, |KMKM| = 8, not Sq4T", 1000,
            criterion2_d12);
  criterion(3, "D8: permutable-in-permutable chain, all subgroups sqn4, Sq4T not PT", 1000,
            criterion3_d8);
  criterion(4, "A4: 10 subgroups split 3/3/4, commutators, Sq4T, not supersolvable", 1000,
            criterion4_a4);
  criterion(5, "A5: 59 subgroups vs oracle, permutables {1, A5}, PT, not solvable", 60000,
            criterion5_a5);
  criterion(6, "corpus(24) property sweeps with zero violations, CLI exit 0", 120000,
            criterion6_sweeps);
  criterion(7, "corpus(24): subgroups of Sq4T groups are Sq4T", 120000, criterion7_proposition1);
  criterion(8, "lattices match the power-set oracle up to order 16", 120000, criterion8_oracle);
  criterion(9, "byte-identical consecutive survey runs", 120000, criterion9_determinism);

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
