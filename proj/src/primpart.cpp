#include "specrec/primpart.hpp"

#include <stdexcept>

#include "specrec/polyring.hpp"

namespace specrec {

namespace {
void check_spec(const PrimitiveSpec& spec) {
  if (abs(spec.base) < 2) throw std::domain_error("primitive divisors: |base| < 2");
  if (spec.index == 0) throw std::domain_error("primitive divisors: index 0");
}
}  // namespace

std::set<Int> primitive_prime_divisors(const PrimitiveSpec& spec) {
  check_spec(spec);
  Int pw;
  mpz_pow_ui(pw.get_mpz_t(), spec.base.get_mpz_t(), spec.index);
  Int n = abs(pw - 1);
  std::set<Int> out;
  if (n == 0) return out;
  for (const auto& [p, e] : factorize(n).factors) {
    (void)e;
    if (p == 2 && spec.base % 2 == 0) continue;
    if (p != 2 && spec.base % p == 0) continue;
    if (mult_order(p, spec.base) == spec.index) out.insert(p);
  }
  return out;
}

Int greatest_primitive_divisor_value(const PrimitiveSpec& spec) {
  check_spec(spec);
  if (spec.index < 3)
    throw std::range_error("greatest primitive divisor: index must be >= 3");
  Int phi = abs(cyclotomic(spec.index).eval(spec.base));
  unsigned long r = 0;
  unsigned long l = spec.index;
  for (const auto& [p, e] : factorize(Int(spec.index)).factors) {
    (void)e;
    r = mpz_get_ui(p.get_mpz_t());
  }
  while (l % r == 0) l /= r;
  Int g = l == 1 ? gcd_int(Int(r), abs(spec.base - 1))
                 : gcd_int(Int(r), abs(cyclotomic(l).eval(spec.base)));
  return phi / g;
}

FactoredNat greatest_primitive_divisor(const PrimitiveSpec& spec) {
  return factorize(greatest_primitive_divisor_value(spec));
}

FactoredNat residue_filter(const FactoredNat& n, unsigned long modulus) {
  if (modulus == 0) throw std::domain_error("residue_filter: modulus 0");
  FactoredNat out = factored_one();
  for (const auto& [p, e] : n.factors) {
    if (modulus == 1 || p % modulus == 1)
      out = fn_multiply(out, from_prime_power(p, e));
  }
  return out;
}

Int residue_filter_value(const Int& n, unsigned long modulus,
                         unsigned long rho_budget) {
  if (n <= 0) throw std::domain_error("residue_filter_value: n <= 0");
  if (modulus == 0) throw std::domain_error("residue_filter_value: modulus 0");
  PartialFactorization pf = factorize_bounded(n, rho_budget);
  Int out = 1;
  for (const auto& [p, e] : pf.factored_part.factors) {
    if (modulus == 1 || p % modulus == 1) {
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), e);
      out *= pw;
    }
  }
  // Unfactored cofactors are kept: the filtered part can only shrink, so the
  // returned value is always a multiple of the exact one.
  for (const auto& c : pf.composite) out *= c;
  return out;
}

bool zsigmondy_exception(const Int& base, unsigned long index) {
  static const std::pair<long, unsigned long> table[] = {
      {2, 1}, {2, 6}, {-2, 2}, {-2, 3}, {3, 1}, {-3, 2}};
  for (const auto& [b, i] : table) {
    if (base == b && index == i) return true;
  }
  return false;
}

}  // namespace specrec
