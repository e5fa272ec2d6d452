#pragma once

#include <string>
#include <vector>

#include "specrec/caselab.hpp"
#include "specrec/fixtures.hpp"

namespace specrec {

// Outcome of matching a computed candidate set against a fixture row.
// Non-exact outcomes stay warnings as long as every mismatch is
// divisibility-compatible or the refutation below still goes through.
struct SigmaComparison {
  CaseStatus status = CaseStatus::Pass;
  std::string tag;  // "exact", "fixture-overcount", "fixture-undercount", ...
  std::vector<std::string> detail;
};

SigmaComparison compare_sigma_row(const SigmaSet& computed,
                                  const Table3Entry& row);

}  // namespace specrec
