#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace specrec {

using Int = mpz_class;

Int pow_int(const Int& base, unsigned long exp);
Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

// Multiplicity of the prime p in n (n != 0).
unsigned long valuation(const Int& n, const Int& p);

bool is_prime(const Int& n);

// How many primality calls fell back to the probabilistic path. Exposed so
// verification reports can state the trust base.
struct PrimalityStats {
  std::uint64_t deterministic = 0;
  std::uint64_t bpsw = 0;
};
PrimalityStats primality_stats();
void reset_primality_stats();

struct FactoredNat {
  Int value{1};
  std::vector<std::pair<Int, unsigned long>> factors;  // ascending primes

  bool operator==(const FactoredNat& o) const { return value == o.value; }

  // "2^2 . 547" style rendering; "1" for the empty product.
  std::string to_string() const;

  unsigned long exponent_of(const Int& p) const;
  std::vector<Int> prime_support() const;
  std::vector<Int> divisors() const;  // sorted ascending; guard against huge counts
};

FactoredNat factored_one();
FactoredNat from_prime_power(const Int& p, unsigned long e);
FactoredNat fn_multiply(const FactoredNat& a, const FactoredNat& b);
FactoredNat fn_lcm(const FactoredNat& a, const FactoredNat& b);
FactoredNat fn_gcd(const FactoredNat& a, const FactoredNat& b);
// a / b, requiring exact divisibility.
FactoredNat fn_divide(const FactoredNat& a, const FactoredNat& b);

// Full factorization; throws std::domain_error for n <= 0.
FactoredNat factorize(const Int& n);

// Factorization that gives up on cofactors whose square root exceeds the
// effort budget. Incomplete pieces are returned unfactored in `composite`.
struct PartialFactorization {
  FactoredNat factored_part;
  std::vector<Int> composite;  // nontrivial unfactored cofactors, ascending
  bool complete() const { return composite.empty(); }
};
PartialFactorization factorize_bounded(const Int& n, std::uint64_t rho_budget);

// p^k with k maximal such that p^k | n, or its complement.
Int pi_part(const Int& n, const std::vector<Int>& primes, bool complement = false);

// none for 1; (p, k) when n = p^k with p prime, k >= 1.
std::optional<std::pair<Int, unsigned long>> is_prime_power(const Int& n);

bool is_odd_prime_power(const Int& n);
// Characteristic of a prime power (the unique prime divisor).
Int char_of(const Int& q);

// Multiplicative order of a modulo the prime r. For r = 2 the convention is
// 1 when a = 1 (mod 4) and 2 when a = 3 (mod 4). Throws std::domain_error
// when r | a (odd r) or when a is even (r = 2).
unsigned long mult_order(const Int& r, const Int& a);

// Sum of Euler totients phi(1) + ... + phi(m).
Int phi_sum(unsigned long m);
unsigned long euler_phi(unsigned long n);

// Primes up to the sieve bound, shared by trial division and tests.
const std::vector<std::uint32_t>& small_primes();

Int int_from_string(const std::string& s);

}  // namespace specrec
