#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permcheck/catalog.hpp"
#include "permcheck/classify.hpp"

namespace permcheck {

struct SurveyOptions {
  int max_order = 24;
  Caps caps{};
  int jobs = 0;  // 0: one worker per hardware thread
  bool run_audits = true;
};

// One failed property instance. `rule` identifies the statement under
// test: lagrange, product-formula, hkhk-in-join, permutable-implies-sqn4,
// lemma-1.1, lemma-1.2, lemma-1.3, lemma-2, lemma-3, ore-subnormal,
// theorem-a, proposition-1.
struct AuditViolation {
  std::string rule;
  std::string group;
  std::string detail;
};

struct SurveyRow {
  std::string name;
  int order = 0;
  std::optional<ClassificationReport> report;
  std::string error;  // set when the group was skipped (cap exceeded)
};

struct SurveyResult {
  int max_order = 0;
  std::vector<SurveyRow> rows;
  std::vector<AuditViolation> violations;
};

// Property sweeps for one group. The caller supplies the group's lattice
// and classification so verdicts are computed once.
std::vector<AuditViolation> audit_group(const GroupTable& g, const Lattice& lattice,
                                        const ClassificationReport& report,
                                        const std::string& name, const Caps& caps);

// Classifies every corpus group up to max_order and runs the audits.
// Groups over a cap get an error row instead of aborting the survey.
// Rows and violations come back in deterministic corpus order regardless
// of the worker count.
SurveyResult run_survey(const SurveyOptions& options);

}  // namespace permcheck
