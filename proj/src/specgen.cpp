#include "specrec/specgen.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "specrec/polyring.hpp"
#include "specrec/primpart.hpp"

namespace specrec {

const char* family_name(Family f) {
  switch (f) {
    case Family::LinearUnitary: return "linear-unitary";
    case Family::Symplectic: return "symplectic";
    case Family::OddDimOrthogonal: return "odd-orthogonal";
    case Family::EvenDimOrthogonalPlus: return "even-orthogonal-plus";
    case Family::EvenDimOrthogonalMinus: return "even-orthogonal-minus";
  }
  return "?";
}

Int GroupId::characteristic() const {
  auto pp = is_prime_power(q);
  if (!pp) throw std::domain_error("field size must be a prime power");
  return pp->first;
}

unsigned long GroupId::field_degree() const {
  auto pp = is_prime_power(q);
  if (!pp) throw std::domain_error("field size must be a prime power");
  return pp->second;
}

Int GroupId::d() const {
  if (family != Family::LinearUnitary)
    throw std::domain_error("d is defined for linear/unitary groups only");
  return gcd_int(Int(dim), q - sign);
}

std::string GroupId::to_string() const {
  std::ostringstream os;
  switch (family) {
    case Family::LinearUnitary: os << (sign > 0 ? 'L' : 'U') << '_' << dim; break;
    case Family::Symplectic: os << "S_" << 2 * dim; break;
    case Family::OddDimOrthogonal: os << "O_" << 2 * dim + 1; break;
    case Family::EvenDimOrthogonalPlus: os << "O+_" << 2 * dim; break;
    case Family::EvenDimOrthogonalMinus: os << "O-_" << 2 * dim; break;
  }
  os << '(' << q << ')';
  return os.str();
}

bool GroupId::operator<(const GroupId& o) const {
  if (family != o.family) return family < o.family;
  if (sign != o.sign) return sign < o.sign;
  if (dim != o.dim) return dim < o.dim;
  return q < o.q;
}

GroupId linear_unitary(int sign, unsigned long dim, const Int& q) {
  if (sign != 1 && sign != -1) throw std::domain_error("sign must be +1 or -1");
  if (!is_prime_power(q)) throw std::domain_error("field size must be a prime power");
  if (sign == -1 && dim < 3)
    throw std::domain_error("unitary groups need dimension at least 3");
  if (dim < 2) throw std::domain_error("dimension must be at least 2");
  if (sign == 1 && dim == 2 && q < 4)
    throw std::domain_error("L_2(2) and L_2(3) are not simple");
  if (sign == -1 && dim == 3 && q == 2)
    throw std::domain_error("U_3(2) is not simple");
  GroupId g;
  g.family = Family::LinearUnitary;
  g.sign = sign;
  g.dim = dim;
  g.q = q;
  return g;
}

namespace {

// q^e - sign^e
Int power_term(const Int& q, int sign, unsigned long e) {
  Int t = pow_int(q, e);
  if (sign < 0 && e % 2 == 1)
    t += 1;
  else
    t -= 1;
  return t;
}

template <class Fn>
void each_partition_rec(unsigned long left, unsigned long max_part,
                        std::vector<unsigned long>& cur, Fn&& fn) {
  if (left == 0) {
    fn(static_cast<const std::vector<unsigned long>&>(cur));
    return;
  }
  for (unsigned long part = std::min(left, max_part); part >= 1; --part) {
    cur.push_back(part);
    each_partition_rec(left - part, part, cur, fn);
    cur.pop_back();
  }
}

// Unordered partitions of n into parts >= 1, nonincreasing order.
template <class Fn>
void each_partition(unsigned long n, Fn&& fn) {
  std::vector<unsigned long> cur;
  each_partition_rec(n, n, cur, fn);
}

std::mutex g_spec_mutex;
std::map<GroupId, SpectrumGenerators> g_spec_cache;

}  // namespace

SpectrumGenerators spectrum_generators(const GroupId& g) {
  if (g.family != Family::LinearUnitary)
    throw std::domain_error("order generators are implemented for linear/unitary groups only");
  if (g.sign != 1 && g.sign != -1) throw std::domain_error("sign must be +1 or -1");
  if (g.dim < 2) throw std::domain_error("dimension must be at least 2");
  if (g.sign == -1 && g.dim == 3 && g.q == 2)
    throw std::domain_error("U_3(2) is not simple");
  {
    std::lock_guard<std::mutex> lock(g_spec_mutex);
    auto it = g_spec_cache.find(g);
    if (it != g_spec_cache.end()) return it->second;
  }

  const unsigned long m = g.dim;
  const int e = g.sign;
  const Int& q = g.q;
  const Int p = g.characteristic();
  const Int qe = q - e;
  const Int d = gcd_int(Int(m), qe);

  std::set<Int> values;

  // semisimple, one block
  values.insert(power_term(q, e, m) / (d * qe));

  // semisimple, two blocks
  for (unsigned long m1 = 1; 2 * m1 <= m; ++m1) {
    unsigned long m2 = m - m1;
    Int l = lcm_int(power_term(q, e, m1), power_term(q, e, m2));
    values.insert(l / gcd_int(Int(m / std::gcd(m1, m2)), qe));
  }

  // semisimple, three or more blocks
  each_partition(m, [&](const std::vector<unsigned long>& parts) {
    if (parts.size() < 3) return;
    Int l(1);
    for (unsigned long mi : parts) l = lcm_int(l, power_term(q, e, mi));
    values.insert(l);
  });

  // mixed and unipotent: p^k with a Jordan block of size p^(k-1) + 1
  for (unsigned long k = 1;; ++k) {
    Int block = pow_int(p, k - 1) + 1;
    if (block > m) break;
    unsigned long rest = m - block.get_ui();
    Int pk = pow_int(p, k);
    if (rest == 0) {
      values.insert(pk);
      continue;
    }
    values.insert(pk * (power_term(q, e, rest) / d));
    if (rest >= 2) {
      each_partition(rest, [&](const std::vector<unsigned long>& parts) {
        if (parts.size() < 2) return;
        Int l(1);
        for (unsigned long mi : parts) l = lcm_int(l, power_term(q, e, mi));
        values.insert(pk * l);
      });
    }
  }

  // keep only divisibility-maximal values
  std::vector<Int> sorted(values.begin(), values.end());
  SpectrumGenerators out;
  out.group = g;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = i + 1; j < sorted.size() && !dominated; ++j)
      dominated = sorted[j] % sorted[i] == 0;
    if (!dominated) out.generators.push_back(sorted[i]);
  }

  std::lock_guard<std::mutex> lock(g_spec_mutex);
  // bound the cache; long sweeps touch each group once and never look back
  if (g_spec_cache.size() >= 512) g_spec_cache.clear();
  return g_spec_cache.emplace(g, out).first->second;
}

bool spectrum_contains(const SpectrumGenerators& s, const Int& a) {
  if (a <= 0) throw std::domain_error("element orders are positive");
  for (const Int& gen : s.generators)
    if (gen % a == 0) return true;
  return false;
}

std::vector<Int> spectrum_elements(const SpectrumGenerators& s) {
  std::set<Int> closure;
  for (const Int& gen : s.generators) {
    for (Int& dv : factorize(gen).divisors()) closure.insert(std::move(dv));
    if (closure.size() > 2000000)
      throw std::length_error("element-order closure too large to enumerate");
  }
  return std::vector<Int>(closure.begin(), closure.end());
}

namespace {

struct ExponentParts {
  Int char_power{1};        // v^l
  Int reduction{1};         // divided out of the cyclotomic product
  std::vector<Int> cyclo;   // positive cyclotomic values
};

Int smallest_power_above(const Int& v, unsigned long bound) {
  Int t(1);
  while (t <= bound) t *= v;
  return t;
}

bool is_power_of_two(unsigned long n) { return n >= 2 && (n & (n - 1)) == 0; }

// shared shape of the symplectic / odd-orthogonal / even-orthogonal branches:
// (v^l / c) * prod_{i<=n} Phi_i(u^2), with v^l the smallest power of v
// exceeding `bound` and c = (2,u-1)^2 when n is a power of two, else (2,u-1).
ExponentParts torus_squares(unsigned long n, const Int& u, const Int& v,
                            unsigned long bound) {
  ExponentParts parts;
  parts.char_power = smallest_power_above(v, bound);
  Int two_part = gcd_int(Int(2), u - 1);
  parts.reduction = is_power_of_two(n) ? two_part * two_part : two_part;
  Int u2 = u * u;
  for (unsigned long i = 1; i <= n; ++i)
    parts.cyclo.push_back(cyclotomic(i).eval(u2));
  return parts;
}

ExponentParts half_spin_torus(unsigned long n, int sign, const Int& u, const Int& v) {
  ExponentParts parts;
  parts.char_power = smallest_power_above(v, 2 * n - 3);
  parts.reduction = gcd_int(Int(2), u - 1);
  parts.cyclo.push_back(abs(cyclotomic(n, sign).eval(u)));
  Int u2 = u * u;
  for (unsigned long i = 1; i < n; ++i)
    parts.cyclo.push_back(cyclotomic(i).eval(u2));
  return parts;
}

ExponentParts exponent_parts(const GroupId& g) {
  const Int v = g.characteristic();
  const Int& u = g.q;
  switch (g.family) {
    case Family::LinearUnitary: {
      if (g.sign != 1 && g.sign != -1) throw std::domain_error("sign must be +1 or -1");
      if (g.dim < 3)
        throw std::domain_error("exponent formula needs dimension at least 3");
      ExponentParts parts;
      parts.char_power = smallest_power_above(v, g.dim - 1);
      if (auto rp = is_prime_power(Int(g.dim))) {
        if ((u - g.sign) % rp->first == 0) parts.reduction = rp->first;
      }
      for (unsigned long i = 1; i <= g.dim; ++i)
        parts.cyclo.push_back(abs(cyclotomic(i, g.sign).eval(u)));
      return parts;
    }
    case Family::Symplectic:
      if (g.dim < 2) throw std::domain_error("symplectic groups need dimension at least 2");
      return torus_squares(g.dim, u, v, 2 * g.dim - 1);
    case Family::OddDimOrthogonal:
      if (g.dim < 3)
        throw std::domain_error("odd-dimensional orthogonal groups need dimension at least 3");
      if (u % 2 == 0)
        throw std::domain_error("odd-dimensional orthogonal groups need odd q");
      return torus_squares(g.dim, u, v, 2 * g.dim - 1);
    case Family::EvenDimOrthogonalPlus:
      if (g.dim >= 5 && g.dim % 2 == 1) return half_spin_torus(g.dim, +1, u, v);
      if (g.dim >= 4 && g.dim % 2 == 0)
        return torus_squares(g.dim - 1, u, v, 2 * (g.dim - 1) - 1);
      throw std::domain_error("plus-type orthogonal groups need dimension at least 4");
    case Family::EvenDimOrthogonalMinus:
      if (g.dim >= 5 && g.dim % 2 == 1) return half_spin_torus(g.dim, -1, u, v);
      if (g.dim >= 4 && g.dim % 2 == 0)
        return torus_squares(g.dim, u, v, 2 * g.dim - 3);
      throw std::domain_error("minus-type orthogonal groups need dimension at least 4");
  }
  throw std::domain_error("unknown family");
}

}  // namespace

Int exponent_value(const GroupId& g) {
  ExponentParts parts = exponent_parts(g);
  Int prod = parts.char_power;
  for (const Int& c : parts.cyclo) prod *= c;
  if (prod % parts.reduction != 0)
    throw std::logic_error("exponent reduction is not a divisor");
  return prod / parts.reduction;
}

FactoredNat exponent(const GroupId& g) {
  ExponentParts parts = exponent_parts(g);
  FactoredNat out = factored_one();
  for (const Int& c : parts.cyclo)
    if (c != 1) out = fn_multiply(out, factorize(c));
  if (parts.reduction != 1) out = fn_divide(out, factorize(parts.reduction));
  auto vp = is_prime_power(parts.char_power);
  if (!vp) throw std::logic_error("characteristic part is not a prime power");
  return fn_multiply(out, from_prime_power(vp->first, vp->second));
}

Int magr_value(unsigned long n, const Int& q) {
  if (n < 5 || n % 2 == 0 || !is_prime(Int(n)))
    throw std::domain_error("n must be a prime at least 5");
  if (q < 3 || q % 2 == 0 || !is_prime_power(q))
    throw std::domain_error("q must be an odd prime power");
  Int num = pow_int(q, n) + 1;
  Int den = (q + 1) * gcd_int(Int(n), q + 1);
  if (num % den != 0) throw std::logic_error("inexact division");
  return num / den - 1;
}

MagrCheck magr_check(unsigned long n, const Int& q) {
  MagrCheck chk;
  chk.n = n;
  chk.q = q;
  chk.a = magr_value(n, q);
  const Int qp1 = q + 1;
  chk.n_divides_q_plus_1 = qp1 % n == 0;

  SpectrumGenerators gens = spectrum_generators(linear_unitary(-1, n, q));
  chk.membership_false = !spectrum_contains(gens, chk.a);

  if (chk.n_divides_q_plus_1) {
    chk.n_part_ok = valuation(chk.a, Int(n)) == valuation(qp1, Int(n));
    Int quot = qp1 / n;
    chk.quotient_divides = quot == 1 || chk.a % quot == 0;
  } else {
    // a = q (q^(n-1) - 1)/(q + 1) here, so the characteristic and every
    // prime of order n-1 at -q divide a; a product of two such primes is
    // never an element order.
    Int p = char_of(q);
    Int k = greatest_primitive_divisor_value(PrimitiveSpec{-q, n - 1});
    Int common = gcd_int(chk.a, k);
    if (common > 1) {
      Int r = common;
      if (!is_prime(r)) {
        PartialFactorization part = factorize_bounded(common, 64);
        if (!part.factored_part.factors.empty())
          r = part.factored_part.factors.front().first;
      }
      chk.divisor_witness = p * r;
    }
  }
  return chk;
}

}  // namespace specrec
