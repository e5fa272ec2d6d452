#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "lab_internal.hpp"
#include "specrec/caselab.hpp"
#include "specrec/gkgraph.hpp"
#include "specrec/intarith.hpp"
#include "specrec/polyring.hpp"
#include "specrec/specgen.hpp"

namespace specrec {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start, const LabConfig& cfg) {
  if (!cfg.live_timing) return 0;
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

std::string istr(const Int& v) { return v.get_str(); }

std::string join_values(const std::vector<Int>& vals) {
  std::string out;
  for (const Int& v : vals) {
    if (!out.empty()) out += ", ";
    out += v.get_str();
  }
  return out.empty() ? "-" : out;
}

std::vector<int> tau_space(const Table1Row& row) {
  if (row.family != Family::LinearUnitary) return {1};
  for (const std::string& cond : row.conditions) {
    if (cond == "tau-plus") return {1};
    if (cond == "tau-minus") return {-1};
  }
  return {1, -1};
}

// Pinned bounded-parameter values, grouped per structural row.
std::vector<CaseReport> ks_reports(const FixtureSet& fx,
                                   const LabConfig& cfg) {
  std::vector<std::string> order;
  std::map<std::string, CaseReport> grouped;
  for (const KsEntry& entry : fx.table_ks) {
    auto t0 = Clock::now();
    if (!grouped.count(entry.row)) {
      order.push_back(entry.row);
      CaseReport rep;
      rep.id.family = "table1-ks";
      rep.id.row = entry.row;
      grouped[entry.row] = rep;
    }
    CaseReport& rep = grouped[entry.row];
    const Table1Row& row = find_row(fx, entry.row);
    std::vector<Int> vals = n_value(row, entry.dim, entry.u, 1);
    if (vals != entry.values) {
      rep.status = CaseStatus::Fail;
      rep.witnesses.push_back("dim " + std::to_string(entry.dim) + " u " +
                              istr(entry.u) + ": computed " +
                              join_values(vals) + " vs fixture " +
                              join_values(entry.values));
    }
    rep.runtime_ms += elapsed_ms(t0, cfg);
  }
  std::vector<CaseReport> reports;
  for (const std::string& key : order) {
    CaseReport& rep = grouped[key];
    unsigned long count = 0;
    for (const KsEntry& entry : fx.table_ks)
      if (entry.row == key) ++count;
    rep.expected = {std::to_string(count) + " pinned entries"};
    rep.computed = {rep.status == CaseStatus::Pass
                        ? "all values reproduced"
                        : "mismatches found"};
    reports.push_back(rep);
  }
  return reports;
}

// Formula values against actual prime-graph components over the small
// parameter zone.
std::vector<CaseReport> graph_zone_reports(const FixtureSet& fx,
                                           const LabConfig& cfg) {
  std::vector<CaseReport> reports;
  for (const Table1Row& row : fx.table1) {
    if (row.family != Family::LinearUnitary) continue;
    auto t0 = Clock::now();
    CaseReport rep;
    rep.id.family = "table1-graph";
    rep.id.row = row.key;
    rep.expected = {row.abridged
                        ? "row values among the component orders, maximum "
                          "attained"
                        : "row values equal the component orders"};
    unsigned long instances = 0;
    for (unsigned long dim = 2; dim <= 13; ++dim) {
      for (Int u = 2; u <= 50; ++u) {
        if (!is_prime_power(u)) continue;
        for (int tau : tau_space(row)) {
          if (dim == 2 && tau == -1) continue;  // same group as +1
          if (violated_condition(row, dim, u, tau)) continue;
          std::vector<Int> vals = n_value(row, dim, u, tau);
          GroupId id;
          id.family = Family::LinearUnitary;
          id.sign = tau;
          id.dim = dim;
          id.q = u;
          SpectrumGenerators gens = spectrum_generators(id);
          PrimeGraph graph = build_prime_graph(gens);
          std::vector<Int> orders;
          for (const ComponentOrder& comp : component_orders(gens, graph))
            orders.insert(orders.end(), comp.orders.begin(),
                          comp.orders.end());
          ++instances;
          std::vector<Int> a = vals, b = orders;
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          bool ok;
          if (row.abridged) {
            ok = !b.empty() && a.back() == b.back();
            for (const Int& v : a)
              ok = ok && std::find(b.begin(), b.end(), v) != b.end();
          } else {
            ok = a == b;
          }
          if (!ok) {
            rep.status = CaseStatus::Fail;
            rep.witnesses.push_back(
                id.to_string() + ": formulas " + join_values(a) +
                " vs components " + join_values(b));
          }
        }
      }
    }
    rep.computed = {std::to_string(instances) + " group instances"};
    rep.runtime_ms = elapsed_ms(t0, cfg);
    reports.push_back(rep);
  }
  return reports;
}

}  // namespace

std::vector<CaseReport> verify_table1(const FixtureSet& fx,
                                      const LabConfig& cfg) {
  std::vector<CaseReport> reports = ks_reports(fx, cfg);
  std::vector<CaseReport> graph = graph_zone_reports(fx, cfg);
  reports.insert(reports.end(), graph.begin(), graph.end());
  return reports;
}

std::vector<CaseReport> verify_table2(const FixtureSet& fx,
                                      const LabConfig& cfg) {
  std::vector<CaseReport> reports;
  for (const Table2Entry& entry : fx.table2) {
    auto t0 = Clock::now();
    CaseReport rep;
    rep.id.family = "table2";
    rep.id.n = entry.n;
    rep.id.row = entry.column;
    std::string tabulated;
    for (unsigned long m : entry.dims)
      tabulated += (tabulated.empty() ? "" : ",") + std::to_string(m);
    rep.expected = {tabulated.empty() ? "-" : tabulated};
    DimensionAudit audit = candidate_dimensions(entry.n, entry.column, fx);
    std::string computed;
    for (unsigned long m : audit.dims)
      computed += (computed.empty() ? "" : ",") + std::to_string(m);
    rep.computed = {computed.empty() ? "-" : computed};
    for (const std::string& note : audit.notes) {
      rep.witnesses.push_back(note);
      if (note.find("not admitted") != std::string::npos)
        rep.status = CaseStatus::Fail;
    }
    if (rep.status == CaseStatus::Pass && audit.dims != entry.dims)
      rep.status = CaseStatus::Warn;
    rep.runtime_ms = elapsed_ms(t0, cfg);
    reports.push_back(rep);
  }
  return reports;
}

std::vector<CaseReport> verify_table3(const FixtureSet& fx,
                                      const LabConfig& cfg) {
  std::vector<CaseReport> reports;
  for (const Table3Entry& row : fx.table3) {
    auto t0 = Clock::now();
    CaseReport rep;
    rep.id.family = "table3";
    rep.id.n = row.n;
    rep.id.m = row.m;
    rep.id.bform = row.bform;
    rep.expected = row.printed;
    SigmaSet s = sigma_set(row.n, row.m, row.bform);
    for (const FactoredNat& v : s.values)
      rep.computed.push_back(v.to_string());
    SigmaComparison cmp = compare_sigma_row(s, row);
    rep.status = cmp.status;
    rep.witnesses.push_back("set comparison: " + cmp.tag);
    for (const std::string& line : cmp.detail) rep.witnesses.push_back(line);
    rep.runtime_ms = elapsed_ms(t0, cfg);
    reports.push_back(rep);
  }
  return reports;
}

std::vector<CaseReport> verify_table4(const FixtureSet& fx,
                                      const LabConfig& cfg) {
  std::vector<CaseReport> reports;
  for (const Table4Row& row : fx.table4) {
    auto t0 = Clock::now();
    CaseReport rep;
    rep.id.family = "table4";
    rep.id.n = row.n;
    rep.id.tau = row.sign;
    rep.id.row = table4_row_key(row);
    rep.expected = {row.factored.to_string()};
    std::optional<Int> computed;
    for (const Table1Row& structural : fx.table1) {
      if (structural.family != Family::LinearUnitary) continue;
      if (violated_condition(structural, row.n, row.q, row.sign)) continue;
      std::vector<Int> vals = n_value(structural, row.n, row.q, row.sign);
      computed = *std::max_element(vals.begin(), vals.end());
      break;
    }
    if (!computed) {
      rep.status = CaseStatus::Fail;
      rep.witnesses = {"no structural row admits the parameters"};
    } else {
      FactoredNat fac = factorize(*computed);
      rep.computed = {fac.to_string()};
      if (*computed != row.value ||
          fac.to_string() != row.factored.to_string()) {
        rep.status = CaseStatus::Fail;
        rep.witnesses.push_back("component order mismatch");
      }
      if (!row.note.empty())
        rep.witnesses.push_back("fixture note: " + row.note);
    }
    rep.runtime_ms = elapsed_ms(t0, cfg);
    reports.push_back(rep);
  }
  return reports;
}

std::vector<CaseReport> verify_phi_floor(const LabConfig& cfg) {
  std::vector<CaseReport> reports;
  for (unsigned long m = 3; m <= 24; ++m) {
    auto t0 = Clock::now();
    CaseReport rep;
    rep.id.family = "phi-floor";
    rep.id.m = m;
    rep.expected = {"cyclotomic product exceeds the power floor"};
    for (const PhiInequalityCertificate& cert : verify_phi_inequality(m)) {
      rep.witnesses.push_back(
          std::string("sign ") + (cert.sign > 0 ? "+1" : "-1") + ": shift " +
          cert.shift.get_str() + ", " + std::to_string(cert.points_checked) +
          " points checked directly");
    }
    rep.computed = {"certificates for both signs"};
    rep.runtime_ms = elapsed_ms(t0, cfg);
    reports.push_back(rep);
  }
  return reports;
}

std::vector<CaseReport> verify_all(const FixtureSet& fx,
                                   const LabConfig& cfg) {
  std::vector<CaseReport> reports;
  auto absorb = [&reports](std::vector<CaseReport> batch) {
    reports.insert(reports.end(), batch.begin(), batch.end());
  };
  absorb(verify_table1(fx, cfg));
  absorb(verify_table2(fx, cfg));
  absorb(verify_table3(fx, cfg));
  absorb(verify_table4(fx, cfg));
  for (unsigned long n : {7ul, 11ul, 13ul, 17ul, 19ul, 23ul})
    absorb(verify_case1(n, fx, cfg));
  for (const Table4Row& row : fx.table4)
    reports.push_back(verify_case2(table4_row_key(row), fx, cfg));
  absorb(verify_exponent_bounds(cfg));
  absorb(verify_phi_floor(cfg));
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CaseReport& a, const CaseReport& b) {
                     return a.id < b.id;
                   });
  return reports;
}

}  // namespace specrec
