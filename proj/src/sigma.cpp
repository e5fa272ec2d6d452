#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "specrec/caselab.hpp"
#include "specrec/gkgraph.hpp"
#include "specrec/polyring.hpp"
#include "specrec/primpart.hpp"
#include "specrec/specgen.hpp"

namespace specrec {

namespace {

bool is_odd_prime_ul(unsigned long v) {
  return v >= 3 && is_prime(Int(v));
}

// scale * (1 + w + ... + w^{m-1}) - shift, as a polynomial in w.
IntPolynomial divisor_seed(unsigned long m, const Int& scale,
                           const Int& shift) {
  std::vector<Int> coef(m, scale);
  coef[0] -= shift;
  return IntPolynomial(std::move(coef));
}

// Distinct-part subsets of {2..m} with sum <= m. Repeated parts contribute
// nothing new to the divisor union, so sets suffice.
void enumerate_part_sets(unsigned long next, unsigned long budget,
                         std::vector<unsigned long>& cur,
                         std::vector<std::vector<unsigned long>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (unsigned long p = next; p <= budget; ++p) {
    cur.push_back(p);
    enumerate_part_sets(p + 1, budget - p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SigmaSet sigma_set(unsigned long n, unsigned long m, const std::string& bform) {
  if (!is_odd_prime_ul(n) || !is_odd_prime_ul(m))
    throw std::domain_error("sigma_set needs odd prime n and m");
  Int scale, shift;
  if (bform == "t-m") {
    scale = 1;
    shift = m;
  } else if (bform == "nt-m") {
    if (n == m) throw std::domain_error("nt-m requires n != m");
    scale = n;
    shift = m;
  } else if (bform == "nt-1") {
    scale = n;
    shift = 1;
  } else {
    throw std::domain_error("unknown b-form: " + bform);
  }

  SigmaSet out;
  out.n = n;
  out.m = m;
  out.bform = bform;

  const IntPolynomial seed = divisor_seed(m, scale, shift);
  std::map<unsigned long, FactoredNat> part;
  for (unsigned long e = 2; e < m; ++e) {
    const IntegralGcd g = integral_gcd(seed, cyclotomic(e));
    FactoredNat kept = residue_filter(factorize(g.content), n - 1);
    out.trace.push_back({e, g.content, kept.value});
    part.emplace(e, std::move(kept));
  }

  // Product of the kept parts over the divisors of l that carry a trace
  // entry. A part equal to m contributes nothing: the seed is congruent to
  // a constant modulo the m-th cyclotomic, and that constant never survives
  // the residue filter for the dimensions in range.
  const auto block = [&](unsigned long l) {
    FactoredNat acc = factored_one();
    for (const auto& [e, kept] : part)
      if (l % e == 0) acc = fn_multiply(acc, kept);
    return acc;
  };

  // Table-facing set: one block per part on the upper half of the range,
  // where no second part fits alongside.
  std::vector<std::pair<FactoredNat, unsigned long>> facing;
  for (unsigned long l = 2; l <= m; ++l) {
    if (2 * l <= m) continue;
    FactoredNat v = block(l);
    if (v.value == 1) continue;
    bool dup = false;
    for (const auto& [prev, prev_l] : facing)
      if (prev.value == v.value) {
        dup = true;
        break;
      }
    if (!dup) facing.emplace_back(std::move(v), l);
  }
  std::sort(facing.begin(), facing.end(),
            [](const auto& a, const auto& b) { return a.first.value < b.first.value; });
  for (auto& [v, l] : facing) {
    out.provenance.push_back({{l}, v.value});
    out.values.push_back(std::move(v));
  }

  // Solver-facing closure: lcm of the blocks over every multiset of parts
  // >= 2 with sum <= m. Distinct-part sets suffice for the union.
  std::vector<std::vector<unsigned long>> tuples;
  std::vector<unsigned long> cur;
  enumerate_part_sets(2, m, cur, tuples);
  std::set<Int> closure;
  for (const auto& tup : tuples) {
    FactoredNat acc = factored_one();
    for (unsigned long l : tup) acc = fn_lcm(acc, block(l));
    if (acc.value != 1) closure.insert(acc.value);
  }
  out.closure.assign(closure.begin(), closure.end());
  return out;
}

namespace {

struct RowPlan {
  const char* key;
  const char* column;
  NvalueClass cls;
  std::vector<Int> field_sizes;  // empty = derive from the divisor condition
};

const std::vector<RowPlan>& row_plans() {
  static const std::vector<RowPlan> plans = {
      {"sympl-prime", "symplectic", NvalueClass::NonLinear, {2, 3}},
      {"odd-orth-3", "odd-orthogonal", NvalueClass::NonLinear, {3}},
      {"orth-plus-prime", "even-orthogonal-plus", NvalueClass::NonLinear,
       {2, 3, 5}},
      {"orth-plus-ext", "even-orthogonal-plus-ext", NvalueClass::NonLinear,
       {2, 3}},
      {"orth-minus-2", "even-orthogonal-minus", NvalueClass::NonLinear, {2}},
      {"orth-minus-3-prime", "even-orthogonal-minus", NvalueClass::NonLinear,
       {3}},
      {"orth-minus-3-pow2p1", "even-orthogonal-minus", NvalueClass::NonLinear,
       {3}},
      {"orth-minus-3-both", "even-orthogonal-minus", NvalueClass::NonLinear,
       {3}},
      {"lu-prime-plus1", "linear-unitary", NvalueClass::LinearUnitary, {}},
      {"l3-4", "linear-unitary", NvalueClass::LinearUnitary, {4}},
      {"u6-2", "linear-unitary", NvalueClass::LinearUnitary, {2}},
  };
  return plans;
}

void add_entry(NvalueSigma& sig, std::set<Int>& pool, const Table1Row& row,
               unsigned long dim, const Int& u, int tau) {
  NvalueEntry entry{row.key, dim, u, tau, n_value(row, dim, u, tau)};
  pool.insert(entry.values.begin(), entry.values.end());
  sig.contributors.push_back(std::move(entry));
}

// Bounded zone where the graph itself is cheap to build; used to pick up
// component orders beyond the tabulated formula of the plus1 row.
bool graph_zone(unsigned long dim, const Int& u) {
  return dim <= 13 && u <= 13;
}

}  // namespace

NvalueSigma nvalue_sigma(unsigned long n, NvalueClass cls,
                         const FixtureSet& fx) {
  NvalueSigma sig;
  std::set<Int> pool;
  std::set<Int> extra_pool;
  std::map<std::string, DimensionAudit> audits;

  for (const RowPlan& plan : row_plans()) {
    if (plan.cls != cls) continue;
    const Table1Row& row = find_row(fx, plan.key);
    auto it = audits.find(plan.column);
    if (it == audits.end())
      it = audits.emplace(plan.column, candidate_dimensions(n, plan.column, fx))
               .first;
    const DimensionAudit& audit = it->second;

    for (unsigned long dim : audit.dims) {
      if (!plan.field_sizes.empty()) {
        for (const Int& u : plan.field_sizes)
          for (int tau : {1, -1}) {
            if (violated_condition(row, dim, u, tau)) continue;
            add_entry(sig, pool, row, dim, u, tau);
            if (row.family != Family::LinearUnitary)
              break;  // the graph side ignores tau here
          }
        continue;
      }
      // Field size bounded by the divisor condition: u = tau + d, d | dim.
      for (int tau : {1, -1})
        for (unsigned long d = 1; d <= dim; ++d) {
          if (dim % d != 0) continue;
          Int u = Int(tau) + Int(d);
          if (u < 2 || !is_prime_power(u)) continue;
          if (violated_condition(row, dim, u, tau)) continue;
          add_entry(sig, pool, row, dim, u, tau);
          if (graph_zone(dim, u)) {
            const SpectrumGenerators gens =
                spectrum_generators(linear_unitary(tau, dim, u));
            const PrimeGraph graph = build_prime_graph(gens);
            for (const ComponentOrder& comp : component_orders(gens, graph))
              for (const Int& order : comp.orders)
                if (!pool.count(order)) extra_pool.insert(order);
          }
        }
    }
  }

  sig.values.assign(pool.begin(), pool.end());
  for (const Int& v : extra_pool)
    if (!pool.count(v)) sig.augmented.push_back(v);
  return sig;
}

}  // namespace specrec
