// permcheck: finite-group permutability analyzer.
//
// Subcommands: classify, check, lattice, survey, verify-paper.
// Exit codes: 0 success, 1 input error, 2 resource cap exceeded,
// 3 verified statement violated / checklist failure.

#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permcheck/catalog.hpp"
#include "permcheck/classify.hpp"
#include "permcheck/reporting.hpp"
#include "permcheck/survey.hpp"
#include "permcheck/verify_paper.hpp"

namespace {

using namespace permcheck;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitViolation = 3;

struct GlobalOptions {
  int max_order_cap = Caps{}.max_group_order;
  int lattice_cap = Caps{}.max_lattice_order;
  std::string format = "text";
  int jobs = 0;
  unsigned seed = 0;  // reserved; all algorithms are deterministic
  bool timings = false;

  Caps caps() const {
    Caps c;
    c.max_group_order = max_order_cap;
    c.max_lattice_order = lattice_cap;
    return c;
  }
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// One element per comma/semicolon-separated item. An item is either
// disjoint point cycles, e.g. "(1 2)(3 4)", or a word in the group's
// named generators, e.g. "(s r)" (the product s*r) or plain "s".
std::vector<Permutation> parse_element_list(const std::string& text, const GroupSpec& spec,
                                            const GroupTable& g) {
  std::vector<std::string> items;
  std::string current;
  for (char ch : text) {
    if (ch == ',' || ch == ';') {
      if (!trim(current).empty()) items.push_back(trim(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!trim(current).empty()) items.push_back(trim(current));
  if (items.empty()) throw ParseError("no elements given");

  bool has_alpha = false;
  for (char ch : text) has_alpha |= std::isalpha(static_cast<unsigned char>(ch)) != 0;

  std::vector<Permutation> out;
  if (!has_alpha) {
    // Items that share parens with no separator are one permutation in
    // disjoint-cycle form; split items are distinct elements.
    for (const auto& item : items) out.push_back(parse_cycles(item, g.degree()));
    return out;
  }

  auto named = named_generators(spec);
  if (named.empty())
    throw ParseError("group '" + spec.name + "' has no named generators; use point cycles");
  for (auto item : items) {
    if (!item.empty() && item.front() == '(') {
      if (item.back() != ')') throw ParseError("unterminated '(' in element word");
      item = trim(item.substr(1, item.size() - 2));
    }
    std::vector<std::string> tokens;
    std::string tok;
    for (char ch : item + " ") {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        if (!tok.empty()) tokens.push_back(tok);
        tok.clear();
      } else {
        tok += ch;
      }
    }
    if (tokens.empty()) throw ParseError("empty element word");
    std::optional<Permutation> acc;
    for (const auto& t : tokens) {
      const Permutation* gen = nullptr;
      for (const auto& [name, perm] : named)
        if (name == t) gen = &perm;
      if (!gen) throw ParseError("unknown generator name '" + t + "' for group " + spec.name);
      acc = acc ? compose(*acc, *gen) : *gen;
    }
    out.push_back(*acc);
  }
  return out;
}

SubgroupSet subgroup_from_elements(const GroupTable& g, const std::vector<Permutation>& elements) {
  Bitset seed(g.order());
  for (const auto& p : elements) {
    auto idx = g.element_index(p);
    if (!idx)
      throw ParseError("element " + cycle_string(p) + " is not a member of the group");
    seed.set(*idx);
  }
  return generated_subgroup(g, seed);
}

int cmd_classify(const GlobalOptions& opts, const std::string& group_name) {
  GroupSpec spec = parse_group_name(group_name);
  GroupTable g = build(spec, opts.caps());
  ClassificationReport r = classify(g, spec.name, opts.caps());
  switch (parse_format(opts.format)) {
    case OutputFormat::json: std::cout << report_to_json(r, opts.timings); break;
    case OutputFormat::csv: std::cout << report_csv_header() << report_to_csv_row(r); break;
    case OutputFormat::text: std::cout << report_to_text(r, opts.timings); break;
  }
  return kExitOk;
}

int cmd_check(const GlobalOptions& opts, const std::string& group_name, const std::string& h_text,
              const std::string& k_text) {
  GroupSpec spec = parse_group_name(group_name);
  GroupTable g = build(spec, opts.caps());
  SubgroupSet h = subgroup_from_elements(g, parse_element_list(h_text, spec, g));
  SubgroupSet k = subgroup_from_elements(g, parse_element_list(k_text, spec, g));
  bool hk_eq_kh = permutes(g, h, k);
  Perm4Verdict verdict = perm4(g, h, k);
  CheckOutput out{spec.name, std::move(h), std::move(k), hk_eq_kh, std::move(verdict)};
  if (opts.format == "json")
    std::cout << check_to_json(out);
  else
    std::cout << check_to_text(out);
  return kExitOk;
}

int cmd_lattice(const GlobalOptions& opts, const std::string& group_name,
                const std::string& format) {
  GroupSpec spec = parse_group_name(group_name);
  GroupTable g = build(spec, opts.caps());
  Lattice lat = all_subgroups(g, opts.caps().max_lattice_order);
  if (format == "dot")
    std::cout << lattice_to_dot(lat, spec.name);
  else if (format == "json")
    std::cout << lattice_to_json(lat);
  else
    throw ParseError("lattice format must be json or dot");
  return kExitOk;
}

int cmd_survey(const GlobalOptions& opts, int max_order) {
  SurveyOptions so;
  so.max_order = max_order;
  so.caps = opts.caps();
  so.jobs = opts.jobs;
  SurveyResult result = run_survey(so);
  switch (parse_format(opts.format)) {
    case OutputFormat::json: std::cout << survey_to_json(result, opts.timings); break;
    case OutputFormat::csv: std::cout << survey_to_csv(result); break;
    case OutputFormat::text: std::cout << survey_to_text(result); break;
  }
  return result.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_verify_paper(const GlobalOptions& opts) {
  VerifyPaperResult result = verify_paper(opts.caps());
  if (opts.format == "json")
    std::cout << verify_to_json(result);
  else
    std::cout << verify_to_text(result);
  return result.failed() == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permcheck: permutability and transitivity analysis of small finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  // --h is a real option on `check`, so help stays on --help only.
  app.set_help_flag("--help", "print help");

  GlobalOptions opts;
  app.add_option("--max-order-cap", opts.max_order_cap, "largest group order to expand")
      ->envname("PERMCHECK_CAP");
  app.add_option("--lattice-cap", opts.lattice_cap, "largest order for full lattice enumeration");
  app.add_option("--format", opts.format, "output format: text, json or csv");
  app.add_option("--jobs", opts.jobs, "worker threads for surveys (0 = all cores)");
  app.add_option("--seed", opts.seed, "reserved; all algorithms are deterministic");
  app.add_flag("--timings", opts.timings, "include wall-clock timings in reports");

  std::string group_name, h_text, k_text, lattice_format = "json";
  int max_order = 24;

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify one group");
  classify_cmd->add_option("--group", group_name, "group name, e.g. A4, D12, C2xC2, file:path")
      ->required();

  CLI::App* check_cmd = app.add_subcommand("check", "pairwise permutability check");
  check_cmd->set_help_flag("--help", "print help");
  check_cmd->add_option("--group", group_name)->required();
  check_cmd->add_option("--h", h_text, "generators of H")->required();
  check_cmd->add_option("--k", k_text, "generators of K")->required();

  CLI::App* lattice_cmd = app.add_subcommand("lattice", "export the subgroup lattice");
  lattice_cmd->add_option("--group", group_name)->required();
  lattice_cmd->add_option("--format", lattice_format, "json or dot");

  CLI::App* survey_cmd = app.add_subcommand("survey", "classify the whole corpus and audit");
  survey_cmd->add_option("--max-order", max_order, "largest corpus group order");

  CLI::App* verify_cmd = app.add_subcommand("verify-paper", "run the fixed verification checklist");
  (void)verify_cmd;

  try {
    app.parse(argc, argv);
    if (classify_cmd->parsed()) return cmd_classify(opts, group_name);
    if (check_cmd->parsed()) return cmd_check(opts, group_name, h_text, k_text);
    if (lattice_cmd->parsed()) return cmd_lattice(opts, group_name, lattice_format);
    if (survey_cmd->parsed()) return cmd_survey(opts, max_order);
    if (verify_cmd->parsed()) return cmd_verify_paper(opts);
    return kExitInput;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
