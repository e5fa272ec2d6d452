#pragma once

#include <set>

#include "specrec/intarith.hpp"

namespace specrec {

// Base/index pair for primitive-divisor queries on base^index - 1.
struct PrimitiveSpec {
  Int base;            // |base| >= 2, may be negative
  unsigned long index;  // >= 1
};

// All primes r with mult_order(r, base) == index, found by factoring
// base^index - 1. Brute-force reference; fine for small indices.
std::set<Int> primitive_prime_divisors(const PrimitiveSpec& spec);

// k_i(a): product of the full r-parts of a^i - 1 over primitive primes r.
// Computed as |Phi_i(a)| divided by gcd(r, Phi_l(a)) where r is the greatest
// prime divisor of i and l is i with all factors of r removed. Requires i >= 3.
FactoredNat greatest_primitive_divisor(const PrimitiveSpec& spec);

// Same value without factoring the result. Safe for large inputs.
Int greatest_primitive_divisor_value(const PrimitiveSpec& spec);

// Part of n supported on primes p with p == 1 (mod modulus).
FactoredNat residue_filter(const FactoredNat& n, unsigned long modulus);

// residue_filter for values too large to factor completely: factors with the
// given rho budget and keeps any unfactored composite cofactor (so the result
// is an upper multiple of the exact filtered part, never smaller).
Int residue_filter_value(const Int& n, unsigned long modulus,
                         unsigned long rho_budget = 4);

// Whether (base, index) is one of the pairs with no primitive prime divisor:
// (2,1), (2,6), (-2,2), (-2,3), (3,1), (-3,2).
bool zsigmondy_exception(const Int& base, unsigned long index);

}  // namespace specrec
