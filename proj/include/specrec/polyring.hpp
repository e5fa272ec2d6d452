#pragma once

#include <string>
#include <vector>

#include "specrec/intarith.hpp"

namespace specrec {

// Dense univariate polynomial over Int. coef[i] is the coefficient of x^i;
// trailing zeros are trimmed, the zero polynomial has empty coef.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coef);
  static IntPolynomial constant(const Int& c);
  static IntPolynomial monomial(const Int& c, std::size_t deg);

  long degree() const { return static_cast<long>(coef_.size()) - 1; }
  bool is_zero() const { return coef_.empty(); }
  const Int& operator[](std::size_t i) const;
  const std::vector<Int>& coefficients() const { return coef_; }
  const Int& leading() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const Int& c) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& o) const { return coef_ == o.coef_; }

  Int eval(const Int& x) const;
  // Substitute -x for x.
  IntPolynomial negate_argument() const;
  // Substitute x + s for x.
  IntPolynomial shift_argument(const Int& s) const;

  Int content() const;                 // nonnegative gcd of coefficients
  IntPolynomial primitive_part() const;  // content removed, leading > 0

  std::string to_string() const;

 private:
  void trim();
  std::vector<Int> coef_;
};

// Exact division; throws if not divisible.
IntPolynomial poly_divexact(const IntPolynomial& num, const IntPolynomial& den);

// i-th cyclotomic polynomial in x.
IntPolynomial cyclotomic(unsigned long i);
// Phi_i(sign * x): the substitution is applied literally, so the leading
// coefficient may be negative (e.g. i=1, sign=-1 gives -x-1).
IntPolynomial cyclotomic(unsigned long i, int sign);
// Product of Phi_i(sign * x) for i = 1..m.
IntPolynomial cyclotomic_product(unsigned long m, int sign);

// Primitive gcd over Q normalized to positive leading coefficient
// (subresultant remainder sequence).
IntPolynomial poly_gcd_primitive(const IntPolynomial& f, const IntPolynomial& g);

// Smallest positive integer content c such that c * G = A f + B g with
// A, B integer polynomials, where G is the primitive gcd of f and g.
struct IntegralGcd {
  Int content;
  IntPolynomial common;  // primitive, positive leading coefficient
  IntPolynomial a_witness;
  IntPolynomial b_witness;
};
IntegralGcd integral_gcd(const IntPolynomial& f, const IntPolynomial& g);

// Whether target lies in the lattice {A f + B g : A, B integer polynomials}
// restricted to combination degree < deg f + deg g.
bool lattice_contains(const IntPolynomial& f, const IntPolynomial& g,
                      const IntPolynomial& target);

// Checks prod_{i=1..m} Phi_i(sign*u) > u^(phi_sum(m)-2) for every integer
// u >= 2, for both signs, via a nonnegative-coefficient certificate after
// shifting, with a pointwise check below the shift. Throws std::range_error
// outside 3 <= m <= 24. Returns a description of the certificate used.
struct PhiInequalityCertificate {
  unsigned long m;
  int sign;
  Int shift;             // all coefficients nonnegative after x -> x + shift
  std::size_t points_checked;  // integers 2..shift-1 verified directly
};
std::vector<PhiInequalityCertificate> verify_phi_inequality(unsigned long m);

}  // namespace specrec
