#include "specrec/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace specrec {

std::string status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "PASS";
    case CaseStatus::Fail: return "FAIL";
    case CaseStatus::Warn: return "WARN";
  }
  return "?";
}

std::string mode_name(CheckMode m) {
  return m == CheckMode::Literal ? "literal" : "staged";
}

std::string CaseId::to_string() const {
  std::string out = family;
  if (n != 0) out += "/" + std::to_string(n);
  if (m != 0) out += "/" + std::to_string(m);
  if (!bform.empty()) out += "/" + bform;
  if (tau != 0) out += tau > 0 ? "/+1" : "/-1";
  if (!row.empty()) out += "/" + row;
  return out;
}

bool CaseId::operator<(const CaseId& o) const {
  if (family != o.family) return family < o.family;
  if (n != o.n) return n < o.n;
  if (m != o.m) return m < o.m;
  if (bform != o.bform) return bform < o.bform;
  if (tau != o.tau) return tau < o.tau;
  return row < o.row;
}

bool CaseId::operator==(const CaseId& o) const {
  return family == o.family && n == o.n && m == o.m && bform == o.bform &&
         tau == o.tau && row == o.row;
}

std::uint64_t config_hash(const LabConfig& cfg) {
  std::string canon = "qmax=" + std::to_string(cfg.magr_q_max) +
                      ";cap=" + std::to_string(cfg.solver_scan_cap) + ";mode=" +
                      (cfg.mode ? mode_name(*cfg.mode) : std::string("both")) +
                      ";seed=" + std::to_string(cfg.seed);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string config_digest(const LabConfig& cfg) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << config_hash(cfg);
  return out.str();
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

namespace {

void write_string_array(std::ostream& out, const std::vector<std::string>& v) {
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << '"' << json_escape(v[i]) << '"';
  }
  out << ']';
}

}  // namespace

void write_records(std::ostream& out, const std::vector<CaseReport>& reports,
                   const LabConfig& cfg) {
  const std::string digest = config_digest(cfg);
  for (const auto& r : reports) {
    out << "{\"version\":\"" << kToolVersion << "\",\"config\":\"" << digest
        << "\",\"case\":\"" << json_escape(r.id.to_string()) << "\""
        << ",\"family\":\"" << json_escape(r.id.family) << "\""
        << ",\"n\":" << r.id.n << ",\"m\":" << r.id.m << ",\"bform\":\""
        << json_escape(r.id.bform) << "\",\"tau\":" << r.id.tau << ",\"row\":\""
        << json_escape(r.id.row) << "\",\"status\":\"" << status_name(r.status)
        << "\",\"expected\":";
    write_string_array(out, r.expected);
    out << ",\"computed\":";
    write_string_array(out, r.computed);
    out << ",\"witnesses\":";
    write_string_array(out, r.witnesses);
    out << ",\"runtime_ms\":" << (cfg.live_timing ? r.runtime_ms : 0) << "}\n";
  }
}

void write_human(std::ostream& out, const std::vector<CaseReport>& reports) {
  for (const auto& r : reports) {
    out << status_name(r.status) << "  " << r.id.to_string() << "  ["
        << r.runtime_ms << "ms]\n";
    bool verbose = r.status != CaseStatus::Pass;
    if (verbose) {
      for (const auto& e : r.expected) out << "    expected: " << e << "\n";
      for (const auto& c : r.computed) out << "    computed: " << c << "\n";
    }
    std::size_t shown = 0;
    for (const auto& w : r.witnesses) {
      if (!verbose && shown == 4) {
        out << "    ... " << (r.witnesses.size() - shown) << " more\n";
        break;
      }
      out << "    " << w << "\n";
      ++shown;
    }
  }
  ReportTotals t = tally(reports);
  out << t.passed << " passed, " << t.failed << " failed, " << t.warned
      << " warned\n";
}

ReportTotals tally(const std::vector<CaseReport>& reports) {
  ReportTotals t;
  for (const auto& r : reports) {
    if (r.status == CaseStatus::Pass) ++t.passed;
    else if (r.status == CaseStatus::Fail) ++t.failed;
    else ++t.warned;
  }
  return t;
}

}  // namespace specrec
