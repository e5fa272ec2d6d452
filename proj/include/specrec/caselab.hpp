#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specrec/fixtures.hpp"
#include "specrec/intarith.hpp"

namespace specrec {

// Identifies one verification unit. Unused parameters stay at their zero
// values so ids sort and print uniformly.
struct CaseId {
  std::string family;  // "magr-grid", "nvalue-sigma", "table3-sigma", ...
  unsigned long n = 0;
  unsigned long m = 0;
  std::string bform;
  int tau = 0;
  std::string row;

  std::string to_string() const;
  bool operator<(const CaseId& o) const;
  bool operator==(const CaseId& o) const;
};

enum class CaseStatus { Pass, Fail, Warn };
std::string status_name(CaseStatus s);

struct CaseReport {
  CaseId id;
  CaseStatus status = CaseStatus::Pass;
  std::vector<std::string> expected;   // fixture side, factored spelling
  std::vector<std::string> computed;   // computed side, factored spelling
  std::vector<std::string> witnesses;  // thresholds, certificates, flagged hits
  std::int64_t runtime_ms = 0;
};

// Which divisor-check flavor the candidate-set verification runs:
// Literal compares divisors against the component-order formula directly,
// Staged solves the cyclotomic-part stage first and only then the master
// equation. Verification runs both unless a config narrows it.
enum class CheckMode { Literal, Staged };
std::string mode_name(CheckMode m);

struct LabConfig {
  std::string fixtures_dir = "fixtures";
  unsigned long magr_q_max = 2000;
  std::uint64_t solver_scan_cap = 10000000;
  std::optional<CheckMode> mode;  // nullopt = run both
  unsigned long jobs = 1;
  std::uint64_t seed = 2026;
  bool live_timing = false;  // structured records carry real runtime when set
};

// ---- dimension bounds ----

struct DimensionAudit {
  std::vector<unsigned long> dims;    // computed admissible dimensions
  std::vector<unsigned long> extras;  // computed but absent from the fixture
  std::vector<std::string> notes;
};

// Admissible section dimensions for target dimension n and a fixture column
// tag ("linear-unitary", "symplectic", "odd-orthogonal", "even-orthogonal-
// minus", "even-orthogonal-plus", "even-orthogonal-plus-ext"). Two-stage
// exponent bound intersected with the column's structural conditions and the
// fixture lower bound; extras are dimensions the computation admits beyond
// the fixture range.
DimensionAudit candidate_dimensions(unsigned long n, const std::string& column,
                                    const FixtureSet& fx);

// Exponent lower/upper bound spot checks on a small grid; one report per
// family plus one for the target-dimension cap.
std::vector<CaseReport> verify_exponent_bounds(const LabConfig& cfg);

// ---- candidate component-order sets (bounded parameters) ----

enum class NvalueClass { NonLinear, LinearUnitary };

struct NvalueEntry {
  std::string row;
  unsigned long dim = 0;
  Int u;
  int tau = 0;
  std::vector<Int> values;
};

struct NvalueSigma {
  std::vector<Int> values;  // sorted, deduplicated
  std::vector<NvalueEntry> contributors;
  std::vector<Int> augmented;  // extra component values of the plus1 rows
};

// Enumerates every admissible bounded-parameter section over the candidate
// dimensions and collects its component orders. NonLinear walks the
// symplectic/orthogonal rows, LinearUnitary the finite-field-list rows.
NvalueSigma nvalue_sigma(unsigned long n, NvalueClass cls, const FixtureSet& fx);

// ---- divisor candidate sets (prime-dimension linear/unitary sections) ----

struct SigmaTrace {
  unsigned long e = 0;
  Int c_e;  // integral-gcd content with the e-th cyclotomic
  Int a_e;  // part supported on primes = 1 mod (n-1)
};

struct SigmaProvenance {
  std::vector<unsigned long> tuple;  // contributing dimension parts
  Int value;
};

struct SigmaSet {
  unsigned long n = 0, m = 0;
  std::string bform;
  std::vector<FactoredNat> values;  // table-facing set, sorted, 1 dropped
  std::vector<Int> closure;         // all tuple lcms, superset for solving
  std::vector<SigmaTrace> trace;
  std::vector<SigmaProvenance> provenance;  // one per table-facing value
};

// b-forms: "t-m", "nt-m" (n != m only), "nt-1".
SigmaSet sigma_set(unsigned long n, unsigned long m, const std::string& bform);

// ---- equation solvers ----

struct SolveConstraints {
  bool odd_only = false;
  Int lower{2};
  unsigned long modulus = 0;  // 0 = unconstrained
  Int residue{0};             // required value of q mod modulus
};

struct SolveResult {
  std::vector<Int> roots;  // admissible prime powers hitting the target
  Int threshold{0};        // smallest checked point with formula > target
  bool monotone_ok = false;
  std::vector<std::string> notes;
};

// All prime powers u satisfying formula(dim, u, tau) = target within the
// constraints. Splits into gcd classes, bisects each smooth branch, then
// validates candidates against the true formula; completeness rests on the
// recorded monotone threshold.
SolveResult solve_formula_eq(const std::string& formula_id, unsigned long dim,
                             int tau, const Int& target,
                             const SolveConstraints& constraints);

struct KEquationResult {
  std::vector<Int> roots;
  Int scanned_to{0};
  std::string separation;  // certificate that no larger root exists
  bool conclusive = false;
};

// Prime-power roots q > 3 of
//   q(q^{n-1}-1)/(q+1) = k(k^{m-1}-1)/(k-tau),  k = k_{n-1}(-q),
// scanning until a dominance certificate separates the two sides for good.
KEquationResult k_equation_roots(unsigned long n, unsigned long m, int tau,
                                 const LabConfig& cfg);

// ---- verification drivers ----

// Grid instance checks of the arithmetic exclusion lemma for dimension n:
// every structural conclusion holds and a = n_2 - 1 is never a prime power
// nor an element order, over odd prime powers 5 <= q <= cfg.magr_q_max.
CaseReport magr_grid_report(unsigned long n, const LabConfig& cfg);

std::vector<CaseReport> verify_case1(unsigned long n, const FixtureSet& fx,
                                     const LabConfig& cfg);

// Table 4 row keys look like "7-3", "8+9", "24-23" (n, sign, q).
std::string table4_row_key(const Table4Row& row);
CaseReport verify_case2(const std::string& row_key, const FixtureSet& fx,
                        const LabConfig& cfg);

// Cyclotomic-product floor certificates wrapped as reports, one per degree
// 3..24.
std::vector<CaseReport> verify_phi_floor(const LabConfig& cfg);

std::vector<CaseReport> verify_table1(const FixtureSet& fx, const LabConfig& cfg);
std::vector<CaseReport> verify_table2(const FixtureSet& fx, const LabConfig& cfg);
std::vector<CaseReport> verify_table3(const FixtureSet& fx, const LabConfig& cfg);
std::vector<CaseReport> verify_table4(const FixtureSet& fx, const LabConfig& cfg);
std::vector<CaseReport> verify_all(const FixtureSet& fx, const LabConfig& cfg);

}  // namespace specrec
