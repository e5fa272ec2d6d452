#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lab_internal.hpp"
#include "specrec/caselab.hpp"
#include "specrec/gkgraph.hpp"
#include "specrec/intarith.hpp"
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

// u-side search space of a structural row: either an explicit list or a free
// prime-power variable (possibly odd-only).
struct UDomain {
  std::vector<Int> fixed;
  bool odd_only = false;
};

UDomain u_domain(const Table1Row& row) {
  UDomain dom;
  for (const std::string& cond : row.conditions) {
    if (cond.rfind("u-eq:", 0) == 0) {
      dom.fixed.push_back(Int(cond.substr(5)));
    } else if (cond.rfind("u-in:", 0) == 0) {
      std::stringstream ss(cond.substr(5));
      std::string item;
      while (std::getline(ss, item, ',')) dom.fixed.push_back(Int(item));
    } else if (cond == "u-odd") {
      dom.odd_only = true;
    }
  }
  std::sort(dom.fixed.begin(), dom.fixed.end());
  return dom;
}

std::vector<int> tau_space(const Table1Row& row) {
  if (row.family != Family::LinearUnitary) return {1};
  for (const std::string& cond : row.conditions) {
    if (cond == "tau-plus") return {1};
    if (cond == "tau-minus") return {-1};
  }
  return {1, -1};
}

bool is_pow2(unsigned long v) { return v > 0 && (v & (v - 1)) == 0; }

bool odd_prime(unsigned long v) { return v % 2 == 1 && is_prime(Int(v)); }

// Dimension-side admissibility; u- and tau-side tokens are checked later via
// violated_condition on concrete candidates.
bool dim_admitted(const Table1Row& row, unsigned long dim) {
  for (const std::string& cond : row.conditions) {
    if (cond.rfind("dim-eq:", 0) == 0) {
      if (dim != std::stoul(cond.substr(7))) return false;
    } else if (cond.rfind("dim-min:", 0) == 0) {
      if (dim < std::stoul(cond.substr(8))) return false;
    } else if (cond == "dim-odd-prime") {
      if (!odd_prime(dim)) return false;
    } else if (cond == "dim-minus1-odd-prime") {
      if (dim < 2 || !odd_prime(dim - 1)) return false;
    } else if (cond == "dim-pow2") {
      if (!is_pow2(dim)) return false;
    } else if (cond == "dim-pow2-plus1") {
      if (dim < 2 || !is_pow2(dim - 1)) return false;
    } else if (cond == "dim-not-pow2-plus1") {
      if (dim >= 2 && is_pow2(dim - 1)) return false;
    } else if (cond == "dim-not-prime") {
      if (is_prime(Int(dim))) return false;
    }
  }
  return true;
}

std::optional<unsigned long> fixed_dim(const Table1Row& row) {
  for (const std::string& cond : row.conditions)
    if (cond.rfind("dim-eq:", 0) == 0) return std::stoul(cond.substr(7));
  return std::nullopt;
}

// Smallest component value the row can produce at this dimension; a sound
// lower bound for the cut because every formula grows with both u and dim.
Int row_floor(const Table1Row& row, unsigned long dim, const UDomain& dom) {
  Int probe_u = dom.fixed.empty() ? Int(dom.odd_only ? 3 : 2) : dom.fixed[0];
  std::optional<Int> best;
  for (const std::string& formula : row.formulas)
    for (int tau : tau_space(row)) {
      Int v = evaluate_formula(formula, dim, probe_u, tau);
      if (!best || v < *best) best = v;
    }
  return *best;
}

struct SweepHit {
  std::string key;
  Family family = Family::LinearUnitary;
  unsigned long dim = 0;
  Int u;
  int tau = 0;
  bool same_char = false;
};

// Whether p divides the order of the dimension-n linear (sign +1) or unitary
// (sign -1) group over q: p is the characteristic, or q^i = sign^i mod p for
// some i up to n.
bool divides_group_order(const Int& p, unsigned long n, int sign,
                         const Int& q) {
  if (p == char_of(q)) return true;
  for (unsigned long i = 2; i <= n; ++i) {
    Int r;
    Int e(i);
    mpz_powm(r.get_mpz_t(), q.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    Int want = (sign > 0 || i % 2 == 0) ? Int(1) : p - 1;
    if (r == want) return true;
  }
  return false;
}

}  // namespace

std::string table4_row_key(const Table4Row& row) {
  return std::to_string(row.n) + (row.sign < 0 ? "-" : "+") + row.q.get_str();
}

CaseReport verify_case2(const std::string& row_key, const FixtureSet& fx,
                        const LabConfig& cfg) {
  auto t0 = Clock::now();
  const Table4Row* target_row = nullptr;
  for (const Table4Row& row : fx.table4)
    if (table4_row_key(row) == row_key) target_row = &row;
  if (!target_row)
    throw std::out_of_range("no such row: " + row_key);

  CaseReport rep;
  rep.id.family = "table4-sweep";
  rep.id.n = target_row->n;
  rep.id.tau = target_row->sign;
  rep.id.row = row_key;
  rep.expected = {target_row->factored.to_string()};

  // Recompute the component order from the structural row that admits the
  // target parameters.
  std::optional<Int> computed;
  for (const Table1Row& row : fx.table1) {
    if (row.family != Family::LinearUnitary) continue;
    if (violated_condition(row, target_row->n, target_row->q,
                           target_row->sign))
      continue;
    std::vector<Int> vals =
        n_value(row, target_row->n, target_row->q, target_row->sign);
    computed = *std::max_element(vals.begin(), vals.end());
    break;
  }
  if (!computed) {
    rep.status = CaseStatus::Fail;
    rep.witnesses = {"no structural row admits the parameters"};
    rep.runtime_ms = elapsed_ms(t0, cfg);
    return rep;
  }
  Int target = *computed;
  FactoredNat fac = factorize(target);
  rep.computed = {fac.to_string()};
  if (target != target_row->value || !(fac == target_row->factored)) {
    rep.status = CaseStatus::Fail;
    rep.witnesses.push_back("component order mismatch against the fixture");
    rep.runtime_ms = elapsed_ms(t0, cfg);
    return rep;
  }
  if (!target_row->note.empty())
    rep.witnesses.push_back("fixture note: " + target_row->note);

  // Sweep every structural family for another group attaining the same
  // component order. Rank-one linear groups and the four-dimensional
  // symplectic groups fall outside the sweep's hypotheses.
  const Int q_char = char_of(target_row->q);
  std::vector<SweepHit> hits;
  std::vector<std::string> cuts;
  for (const Table1Row& row : fx.table1) {
    if (row.key == "l2-odd" || row.key == "l2-even") continue;
    UDomain dom = u_domain(row);
    std::optional<unsigned long> only_dim = fixed_dim(row);
    unsigned long dim = only_dim ? *only_dim : 2;
    for (;; ++dim) {
      if (dim > 4096) throw std::logic_error("sweep cut never fired");
      if (only_dim && dim > *only_dim) break;
      if (!dim_admitted(row, dim)) continue;
      if (row.key == "sympl-pow2" && dim == 2) continue;
      if (!only_dim && row_floor(row, dim, dom) > target) {
        cuts.push_back(row.key + ": dimensions closed at " +
                       std::to_string(dim));
        break;
      }
      for (int tau : tau_space(row)) {
        std::vector<Int> candidates;
        if (!dom.fixed.empty()) {
          candidates = dom.fixed;
        } else {
          SolveConstraints cons;
          cons.odd_only = dom.odd_only;
          for (const std::string& formula : row.formulas) {
            SolveResult res =
                solve_formula_eq(formula, dim, tau, target, cons);
            candidates.insert(candidates.end(), res.roots.begin(),
                              res.roots.end());
          }
        }
        for (const Int& u : candidates) {
          if (violated_condition(row, dim, u, tau)) continue;
          std::vector<Int> vals = n_value(row, dim, u, tau);
          if (std::find(vals.begin(), vals.end(), target) == vals.end())
            continue;
          bool self = row.family == Family::LinearUnitary &&
                      dim == target_row->n && u == target_row->q &&
                      tau == target_row->sign;
          if (self) continue;
          SweepHit hit;
          hit.key = row.key;
          hit.family = row.family;
          hit.dim = dim;
          hit.u = u;
          hit.tau = tau;
          hit.same_char = char_of(u) == q_char;
          hits.push_back(hit);
        }
      }
    }
  }

  for (const SweepHit& hit : hits) {
    std::string line = hit.key + " dim " + std::to_string(hit.dim) + " u " +
                       istr(hit.u);
    if (hit.same_char) {
      rep.witnesses.push_back("same-order group in the same characteristic: " +
                              line);
    } else if (!divides_group_order(char_of(hit.u), target_row->n,
                                    target_row->sign, target_row->q)) {
      // A section's characteristic must divide the ambient order.
      rep.witnesses.push_back("same-order group refuted, characteristic " +
                              istr(char_of(hit.u)) +
                              " outside the ambient order: " + line);
    } else {
      // A section's element orders all divide ambient element orders; find
      // an order of the candidate that the ambient group misses.
      GroupId candidate;
      candidate.family = hit.family;
      candidate.sign = hit.family == Family::LinearUnitary
                           ? hit.tau
                           : (hit.family == Family::EvenDimOrthogonalMinus
                                  ? -1
                                  : +1);
      candidate.dim = hit.dim;
      candidate.q = hit.u;
      SpectrumGenerators cand = spectrum_generators(candidate);
      SpectrumGenerators ambient = spectrum_generators(
          linear_unitary(target_row->sign, target_row->n, target_row->q));
      std::optional<Int> outside;
      for (const Int& gen : cand.generators)
        if (!spectrum_contains(ambient, gen)) {
          outside = gen;
          break;
        }
      if (outside) {
        rep.witnesses.push_back("same-order group refuted, element order " +
                                istr(*outside) +
                                " outside the ambient spectrum: " + line);
      } else {
        rep.status = CaseStatus::Fail;
        rep.witnesses.push_back("same-order group across characteristics: " +
                                line);
      }
    }
  }
  for (const std::string& cut : cuts)
    if (cut.rfind("lu-prime", 0) == 0) rep.witnesses.push_back(cut);
  rep.runtime_ms = elapsed_ms(t0, cfg);
  return rep;
}

}  // namespace specrec
