#include "permcheck/reporting.hpp"

#include <sstream>

#include <json.hpp>

namespace permcheck {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json members_json(const Bitset& members) {
  ordered_json arr = ordered_json::array();
  members.for_each([&](int i) { arr.push_back(i + 1); });  // 1-based externally
  return arr;
}

ordered_json subgroup_json(const SubgroupSet& s) {
  ordered_json j;
  j["order"] = s.size();
  j["members"] = members_json(s.members());
  return j;
}

std::string subgroup_text(const SubgroupSet& s) {
  std::string out = "{";
  bool first = true;
  s.members().for_each([&](int i) {
    if (!first) out += ", ";
    out += cycle_string(s.parent().element(i));
    first = false;
  });
  return out + "} (order " + std::to_string(s.size()) + ")";
}

ordered_json report_json_value(const ClassificationReport& r, bool timings) {
  ordered_json j;
  j["group"] = r.group_name;
  j["order"] = r.order;
  j["num_subgroups"] = r.num_subgroups;
  ordered_json flags;
  flags["abelian"] = r.abelian;
  flags["nilpotent"] = r.nilpotent;
  flags["solvable"] = r.solvable;
  flags["supersolvable"] = r.supersolvable;
  flags["pt"] = r.pt;
  flags["sq4t"] = r.sq4t;
  j["flags"] = std::move(flags);
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : r.witnesses) {
    ordered_json wj;
    wj["claim"] = w.claim;
    ordered_json subs = ordered_json::array();
    for (const auto& s : w.subgroups) subs.push_back(subgroup_json(s));
    wj["subgroups"] = std::move(subs);
    wj["verdict"] = w.verdict;
    witnesses.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(witnesses);
  if (timings) {
    ordered_json t;
    for (const auto& [key, ms] : r.elapsed_ms) t[key] = ms;
    j["elapsed_ms"] = std::move(t);
  }
  return j;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw ParseError("unknown format: '" + name + "' (expected text, json or csv)");
}

std::string report_to_json(const ClassificationReport& r, bool timings) {
  return report_json_value(r, timings).dump(2) + "\n";
}

std::string report_to_text(const ClassificationReport& r, bool timings) {
  std::ostringstream out;
  out << "group: " << r.group_name << " (order " << r.order << ", " << r.num_subgroups
      << " subgroups)\n";
  out << "  abelian:       " << yesno(r.abelian) << "\n";
  out << "  nilpotent:     " << yesno(r.nilpotent) << "\n";
  out << "  solvable:      " << yesno(r.solvable) << "\n";
  out << "  supersolvable: " << yesno(r.supersolvable) << "\n";
  out << "  pt:            " << yesno(r.pt) << "\n";
  out << "  sq4t:          " << yesno(r.sq4t) << "\n";
  for (const auto& w : r.witnesses) {
    out << "  witness: " << w.claim << "\n";
    for (const auto& s : w.subgroups) out << "    " << subgroup_text(s) << "\n";
    out << "    " << w.verdict << "\n";
  }
  if (timings)
    for (const auto& [key, ms] : r.elapsed_ms) out << "  " << key << ": " << ms << " ms\n";
  return out.str();
}

std::string report_csv_header() {
  return "group,order,num_subgroups,abelian,nilpotent,solvable,supersolvable,pt,sq4t\n";
}

std::string report_to_csv_row(const ClassificationReport& r) {
  std::ostringstream out;
  out << r.group_name << ',' << r.order << ',' << r.num_subgroups << ',' << r.abelian << ','
      << r.nilpotent << ',' << r.solvable << ',' << r.supersolvable << ',' << r.pt << ','
      << r.sq4t << "\n";
  return out.str();
}

std::string lattice_to_json(const Lattice& lattice) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < lattice.size(); ++i) {
    ordered_json j;
    j["order"] = lattice.subgroup(i).size();
    j["members"] = members_json(lattice.subgroup(i).members());
    j["normal"] = lattice.normal(i);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string lattice_to_dot(const Lattice& lattice, const std::string& group_name) {
  std::ostringstream out;
  out << "digraph \"" << group_name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (int i = 0; i < lattice.size(); ++i) {
    out << "  s" << i << " [label=\"#" << i << " order " << lattice.subgroup(i).size();
    if (lattice.normal(i)) out << " (normal)";
    out << "\"];\n";
  }
  // Hasse edges: maximal proper inclusions only.
  for (int i = 0; i < lattice.size(); ++i) {
    for (int j = 0; j < lattice.size(); ++j) {
      if (i == j) continue;
      const Bitset& a = lattice.subgroup(i).members();
      const Bitset& b = lattice.subgroup(j).members();
      if (!(a.subset_of(b) && lattice.subgroup(i).size() < lattice.subgroup(j).size())) continue;
      bool maximal = true;
      for (int m = 0; m < lattice.size() && maximal; ++m) {
        if (m == i || m == j) continue;
        const Bitset& c = lattice.subgroup(m).members();
        maximal = !(a.subset_of(c) && c.subset_of(b) && lattice.subgroup(m).size() > lattice.subgroup(i).size() &&
                    lattice.subgroup(m).size() < lattice.subgroup(j).size());
      }
      if (maximal) out << "  s" << i << " -> s" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string check_to_json(const CheckOutput& c) {
  ordered_json j;
  j["group"] = c.group;
  j["H"] = members_json(c.h.members());
  j["K"] = members_json(c.k.members());
  j["perm4"] = c.verdict.holds;
  j["join_order"] = c.verdict.join.size();
  j["product_order"] = c.verdict.product.size();
  j["permutes"] = c.permutes_flag;
  return j.dump(2) + "\n";
}

std::string check_to_text(const CheckOutput& c) {
  std::ostringstream out;
  out << "group: " << c.group << "\n";
  out << "H = " << subgroup_text(c.h) << "\n";
  out << "K = " << subgroup_text(c.k) << "\n";
  out << "HK = KH:        " << yesno(c.permutes_flag) << "\n";
  out << "<H,K> = HKHK:   " << yesno(c.verdict.holds) << "\n";
  out << "|<H,K>| = " << c.verdict.join.size() << ", |HKHK| = " << c.verdict.product.size()
      << "\n";
  if (!c.verdict.witness_note.empty()) out << "note: " << c.verdict.witness_note << "\n";
  return out.str();
}

std::string survey_to_json(const SurveyResult& s, bool timings) {
  ordered_json j;
  j["max_order"] = s.max_order;
  ordered_json rows = ordered_json::array();
  for (const auto& row : s.rows) {
    ordered_json rj;
    rj["group"] = row.name;
    if (row.report) {
      rj = report_json_value(*row.report, timings);
    } else {
      rj["error"] = row.error;
    }
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  ordered_json audit;
  audit["violations"] = ordered_json::array();
  for (const auto& v : s.violations) {
    ordered_json vj;
    vj["rule"] = v.rule;
    vj["group"] = v.group;
    vj["detail"] = v.detail;
    audit["violations"].push_back(std::move(vj));
  }
  audit["violation_count"] = static_cast<int>(s.violations.size());
  j["audit"] = std::move(audit);
  return j.dump(2) + "\n";
}

std::string survey_to_text(const SurveyResult& s) {
  std::ostringstream out;
  out << "survey up to order " << s.max_order << " (" << s.rows.size() << " groups)\n";
  out << "group            order  subs  ab ni so ss pt s4\n";
  for (const auto& row : s.rows) {
    if (!row.report) {
      out << row.name << ": " << row.error << "\n";
      continue;
    }
    const ClassificationReport& r = *row.report;
    std::string name = r.group_name;
    if (name.size() < 16) name.resize(16, ' ');
    out << name << " " << r.order;
    for (std::size_t pad = std::to_string(r.order).size(); pad < 6; ++pad) out << ' ';
    out << r.num_subgroups;
    for (std::size_t pad = std::to_string(r.num_subgroups).size(); pad < 5; ++pad) out << ' ';
    auto cell = [&](bool b) { out << ' ' << (b ? " +" : " -"); };
    cell(r.abelian);
    cell(r.nilpotent);
    cell(r.solvable);
    cell(r.supersolvable);
    cell(r.pt);
    cell(r.sq4t);
    out << "\n";
  }
  out << "audit: " << s.violations.size() << " violation(s)\n";
  for (const auto& v : s.violations)
    out << "  [" << v.rule << "] " << v.group << ": " << v.detail << "\n";
  return out.str();
}

std::string survey_to_csv(const SurveyResult& s) {
  std::string out = report_csv_header();
  for (const auto& row : s.rows) {
    if (row.report)
      out += report_to_csv_row(*row.report);
    else
      out += row.name + ",error: " + row.error + "\n";
  }
  return out;
}

std::string verify_to_json(const VerifyPaperResult& v) {
  ordered_json j;
  ordered_json checks = ordered_json::array();
  for (const auto& c : v.checks) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["expected"] = c.expected;
    cj["actual"] = c.actual;
    cj["pass"] = c.pass;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  ordered_json summary;
  summary["passed"] = v.passed();
  summary["failed"] = v.failed();
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

std::string verify_to_text(const VerifyPaperResult& v) {
  std::ostringstream out;
  for (const auto& c : v.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ": expected " << c.expected
        << ", actual " << c.actual << "\n";
  }
  out << v.passed() << " passed, " << v.failed() << " failed\n";
  return out.str();
}

}  // namespace permcheck
