#pragma once

#include <string>

#include "permcheck/classify.hpp"
#include "permcheck/permutability.hpp"
#include "permcheck/survey.hpp"
#include "permcheck/verify_paper.hpp"

namespace permcheck {

enum class OutputFormat { text, json, csv };

// Accepts "text", "json", "csv"; throws ParseError otherwise.
OutputFormat parse_format(const std::string& name);

// All serializers are deterministic: identical inputs give byte-identical
// output. Timings are therefore opt-in.
std::string report_to_json(const ClassificationReport& r, bool timings = false);
std::string report_to_text(const ClassificationReport& r, bool timings = false);
std::string report_csv_header();
std::string report_to_csv_row(const ClassificationReport& r);

// Lattice export: JSON array of {order, members (1-based element indices),
// normal}, or a DOT Hasse diagram whose edges are the maximal inclusions.
std::string lattice_to_json(const Lattice& lattice);
std::string lattice_to_dot(const Lattice& lattice, const std::string& group_name);

struct CheckOutput {
  std::string group;
  SubgroupSet h;
  SubgroupSet k;
  bool permutes_flag = false;
  Perm4Verdict verdict;
};

std::string check_to_json(const CheckOutput& c);
std::string check_to_text(const CheckOutput& c);

std::string survey_to_json(const SurveyResult& s, bool timings = false);
std::string survey_to_text(const SurveyResult& s);
std::string survey_to_csv(const SurveyResult& s);

std::string verify_to_json(const VerifyPaperResult& v);
std::string verify_to_text(const VerifyPaperResult& v);

}  // namespace permcheck
