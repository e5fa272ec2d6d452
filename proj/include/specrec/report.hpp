#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "specrec/caselab.hpp"

namespace specrec {

inline constexpr const char* kToolVersion = "1.0.0";

// FNV-1a over the canonical config rendering; stable across runs and builds.
std::uint64_t config_hash(const LabConfig& cfg);
std::string config_digest(const LabConfig& cfg);  // 16 hex chars

// One JSON object per line, fixed key order; every record carries version and
// config digest. runtime_ms renders as 0 unless cfg.live_timing, so repeat
// runs are byte-identical.
void write_records(std::ostream& out, const std::vector<CaseReport>& reports,
                   const LabConfig& cfg);

// Terminal table; always shows measured runtime.
void write_human(std::ostream& out, const std::vector<CaseReport>& reports);

struct ReportTotals {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t warned = 0;
};
ReportTotals tally(const std::vector<CaseReport>& reports);

std::string json_escape(const std::string& s);

}  // namespace specrec
