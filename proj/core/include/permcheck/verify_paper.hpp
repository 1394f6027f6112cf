#pragma once

#include <string>
#include <vector>

#include "permcheck/errors.hpp"

namespace permcheck {

struct VerifyCheck {
  std::string id;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyPaperResult {
  std::vector<VerifyCheck> checks;

  int passed() const;
  int failed() const;
};

// Fixed verification checklist: the worked examples (S3, D12, D8, A5, A4)
// plus the property sweeps over the corpus up to order 16. Failures are
// data, not exceptions.
VerifyPaperResult verify_paper(const Caps& caps = {});

}  // namespace permcheck
