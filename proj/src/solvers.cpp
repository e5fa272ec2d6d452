#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "specrec/caselab.hpp"
#include "specrec/gkgraph.hpp"
#include "specrec/intarith.hpp"
#include "specrec/primpart.hpp"

namespace specrec {
namespace {

Int tau_pow(const Int& u, int tau, unsigned long e) {
  Int v = pow_int(u, e);
  return (tau < 0 && e % 2 == 1) ? Int(v + 1) : Int(v - 1);
}

// One monotone branch of a formula: a floor-division surrogate that agrees
// with the exact formula everywhere `admit` holds and never throws elsewhere.
struct Branch {
  std::function<Int(const Int&)> value;
  std::function<bool(const Int&)> admit;
  std::string label;
};

std::vector<Branch> formula_branches(const std::string& id, unsigned long dim,
                                     int tau) {
  std::vector<Branch> out;
  auto parity = [&](std::function<Int(const Int&)> numer) {
    out.push_back({[numer](const Int& u) { return numer(u); },
                   [](const Int& u) { return u % 2 == 0; },
                   "even"});
    out.push_back({[numer](const Int& u) { return Int(numer(u) / 2); },
                   [](const Int& u) { return u % 2 == 1; },
                   "odd"});
  };
  if (id == "lu-prime") {
    Int d(dim);
    out.push_back({[dim, tau](const Int& u) {
                     return Int(tau_pow(u, tau, dim) / (u - tau));
                   },
                   [d, tau](const Int& u) { return gcd_int(d, u - tau) == 1; },
                   "coprime"});
    out.push_back({[dim, tau, d](const Int& u) {
                     return Int(tau_pow(u, tau, dim) / ((u - tau) * d));
                   },
                   [d, tau](const Int& u) { return (u - tau) % d == 0; },
                   "divisible"});
  } else if (id == "lu-prime-plus1") {
    out.push_back({[dim, tau](const Int& u) {
                     return Int(tau_pow(u, tau, dim - 1) / (u - tau));
                   },
                   [](const Int&) { return true; },
                   "single"});
  } else if (id == "lu-prime-plus1-extra") {
    out.push_back(
        {[dim, tau](const Int& u) {
           return Int(tau_pow(u, tau, dim) / ((u - tau) * (u - tau)));
         },
         [dim, tau](const Int& u) { return Int(dim) % (u - tau) == 0; },
         "single"});
  } else if (id == "sympl-pow2" || id == "odd-orth-pow2" ||
             id == "orth-minus-pow2") {
    parity([dim](const Int& u) { return Int(pow_int(u, dim) + 1); });
  } else if (id == "sympl-prime" || id == "orth-plus-ext") {
    unsigned long e = id == "orth-plus-ext" ? dim - 1 : dim;
    parity([e](const Int& u) { return Int(pow_int(u, e) - 1); });
  } else if (id == "orth-plus-prime") {
    out.push_back({[dim](const Int& u) {
                     return Int((pow_int(u, dim) - 1) / (u - 1));
                   },
                   [](const Int&) { return true; },
                   "single"});
  } else if (id == "orth-minus-2-pow2p1") {
    out.push_back({[dim](const Int& u) { return Int(pow_int(u, dim - 1) + 1); },
                   [](const Int&) { return true; },
                   "single"});
  } else if (id == "orth-minus-3-prime") {
    out.push_back({[dim](const Int& u) {
                     return Int((pow_int(u, dim) + 1) / 4);
                   },
                   [dim](const Int& u) { return (pow_int(u, dim) + 1) % 4 == 0; },
                   "single"});
  } else if (id == "orth-minus-3-pow2p1") {
    out.push_back({[dim](const Int& u) {
                     return Int((pow_int(u, dim - 1) + 1) / 2);
                   },
                   [](const Int& u) { return u % 2 == 1; },
                   "single"});
  }
  return out;
}

bool admissible_root(const Int& u, const SolveConstraints& c) {
  if (u < c.lower) return false;
  if (c.odd_only && u % 2 == 0) return false;
  if (c.modulus != 0 && u % Int(c.modulus) != c.residue) return false;
  return is_prime_power(u).has_value();
}

}  // namespace

SolveResult solve_formula_eq(const std::string& formula_id, unsigned long dim,
                             int tau, const Int& target,
                             const SolveConstraints& constraints) {
  SolveResult res;
  if (target < 1) {
    res.notes.push_back("target below formula range");
    res.monotone_ok = true;
    return res;
  }

  std::size_t colon = formula_id.find(':');
  if (colon != std::string::npos && formula_id.substr(0, colon) == "const") {
    Int k(formula_id.substr(colon + 1));
    if (k == target)
      res.notes.push_back("constant formula equals target for every field size");
    res.monotone_ok = k != target;
    return res;
  }
  if (formula_id == "char") {
    if (is_prime(target)) {
      res.notes.push_back("characteristic formula: every power of the target");
      res.monotone_ok = false;
    } else {
      res.monotone_ok = true;
    }
    return res;
  }
  if (formula_id == "u-minus-1" || formula_id == "u-plus-1" ||
      formula_id == "l2-half") {
    std::vector<Int> cand;
    if (formula_id == "u-minus-1") cand.push_back(target + 1);
    if (formula_id == "u-plus-1") cand.push_back(target - 1);
    if (formula_id == "l2-half") {
      cand.push_back(2 * target - 1);
      cand.push_back(2 * target + 1);
    }
    for (const Int& u : cand)
      if (u >= 2 && admissible_root(u, constraints) &&
          evaluate_formula(formula_id, dim, u, tau) == target)
        res.roots.push_back(u);
    res.monotone_ok = true;
    return res;
  }

  std::vector<Branch> branches = formula_branches(formula_id, dim, tau);
  if (branches.empty())
    throw std::domain_error("no solver branches for formula: " + formula_id);

  std::set<Int> roots;
  Int threshold = 0;
  bool monotone = true;
  for (const Branch& br : branches) {
    Int lo = constraints.lower > 2 ? constraints.lower : Int(2);
    if (tau > 0 && lo <= tau) lo = tau + 1;
    Int hi = lo;
    while (br.value(hi) < target) hi = hi * 2 + 1;
    Int a = lo, b = hi;
    while (a < b) {
      Int mid = (a + b) / 2;
      if (br.value(mid) < target)
        a = mid + 1;
      else
        b = mid;
    }
    // Floor division can plateau, so walk the (short) stretch where the
    // surrogate equals the target and test each point exactly.
    Int u = a;
    while (br.value(u) == target) {
      if (br.admit(u) && admissible_root(u, constraints) &&
          evaluate_formula(formula_id, dim, u, tau) == target)
        roots.insert(u);
      ++u;
    }
    if (u > threshold) threshold = u;
    for (const Int& p : {lo, Int(u - 1)})
      if (p >= lo && br.value(p) > br.value(p + 1)) monotone = false;
    std::ostringstream note;
    note << formula_id << "[" << br.label << "]: exceeds target from u="
         << u.get_str();
    res.notes.push_back(note.str());
  }
  res.roots.assign(roots.begin(), roots.end());
  res.threshold = threshold;
  res.monotone_ok = monotone;
  return res;
}

KEquationResult k_equation_roots(unsigned long n, unsigned long m, int tau,
                                 const LabConfig& cfg) {
  KEquationResult res;
  unsigned long d = euler_phi(n - 1);
  Int r = 1;  // greatest prime factor of n-1
  for (const auto& [p, e] : factorize(Int(n - 1)).factors)
    if (p > r) r = p;

  auto lhs = [n](const Int& q) {
    return Int(q * ((pow_int(q, n - 1) - 1) / (q + 1)));
  };
  auto rhs = [m, tau](const Int& k) {
    return Int(k * ((pow_int(k, m - 1) - 1) / (k - tau)));
  };

  bool rhs_dominant = d * (m - 1) > n - 1;
  bool lhs_dominant = !rhs_dominant && m == 3 && n - 1 > 2 * d;

  std::uint64_t checked = 0;
  for (Int q = 4; checked < cfg.solver_scan_cap; ++q) {
    if (!is_prime_power(q)) continue;
    ++checked;
    res.scanned_to = q;
    Int k = greatest_primitive_divisor_value(PrimitiveSpec{Int(-q), n - 1});
    if (k > 1 && rhs(k) == lhs(q)) res.roots.push_back(q);

    if (rhs_dominant) {
      // k >= (q-1)^d / r, so rhs > k^{m-1}/4 >= lhs once
      // (q-1)^{d(m-1)} >= 4 r^{m-1} q^{n-1}; the ratio grows with q.
      if (pow_int(q - 1, d * (m - 1)) >=
          4 * pow_int(r, m - 1) * pow_int(q, n - 1)) {
        std::ostringstream s;
        s << "rhs dominates beyond q=" << q.get_str() << ": (q-1)^"
          << d * (m - 1) << " >= 4*" << r.get_str() << "^" << m - 1 << "*q^"
          << n - 1;
        res.separation = s.str();
        res.conclusive = true;
        break;
      }
    } else if (lhs_dominant) {
      // k <= (q+1)^d and rhs <= k(k+1) <= 2(q+1)^{2d}; lhs outgrows it.
      if (lhs(q) > 2 * pow_int(q + 1, 2 * d)) {
        std::ostringstream s;
        s << "lhs dominates beyond q=" << q.get_str() << ": lhs > 2(q+1)^"
          << 2 * d;
        res.separation = s.str();
        res.conclusive = true;
        break;
      }
    } else {
      res.separation = "no dominance certificate for this (n, m)";
      break;
    }
  }
  return res;
}

}  // namespace specrec
