#pragma once

#include <optional>
#include <vector>

#include "specrec/intarith.hpp"

namespace specrec {

enum class Family {
  LinearUnitary,
  Symplectic,
  OddDimOrthogonal,
  EvenDimOrthogonalPlus,
  EvenDimOrthogonalMinus,
};

const char* family_name(Family f);

// A concrete classical group instance. For LinearUnitary, dim is the ambient
// dimension m and sign is epsilon (+1 linear, -1 unitary). For the other
// families dim follows the usual rank conventions: Symplectic S_{2n},
// OddDimOrthogonal O_{2n+1}, EvenDimOrthogonal O^{sign}_{2n}.
struct GroupId {
  Family family = Family::LinearUnitary;
  int sign = +1;  // epsilon/tau; ignored for Symplectic, OddDimOrthogonal
  unsigned long dim = 2;
  Int q = 2;  // field size, a prime power

  Int characteristic() const;      // the prime p with q = p^f
  unsigned long field_degree() const;  // f
  Int d() const;                   // (dim, q - sign); LinearUnitary only
  std::string to_string() const;   // e.g. "U_7(3)", "S_10(2)", "O-_14(3)"
  bool operator<(const GroupId& o) const;
};

GroupId linear_unitary(int sign, unsigned long dim, const Int& q);

// Finite generator list whose divisor closure is the element-order set.
// Generators are kept as exact values (divisibility-maximal, deduplicated,
// ascending); factorizations are computed only where needed.
struct SpectrumGenerators {
  GroupId group;
  std::vector<Int> generators;
};

// Generators for linear/unitary groups, one per closure item:
// (a) (q^m - e^m)/(d(q - e));
// (b) lcm(q^m1 - e^m1, q^m2 - e^m2)/((m/(m1,m2), q - e)) over m1 + m2 = m;
// (c) lcm over partitions into s >= 3 parts;
// (d) p^k (q^m1 - e^m1)/d with p^(k-1) + 1 + m1 = m;
// (e) p^k lcm(...) over s >= 2 parts with p^(k-1) + 1 + sum = m;
// (f) p^k with p^(k-1) + 1 = m.
SpectrumGenerators spectrum_generators(const GroupId& g);

// Whether a divides some generator.
bool spectrum_contains(const SpectrumGenerators& s, const Int& a);

// Full element-order set (divisor closure of the generators). Only intended
// for small groups; throws if the closure would be enormous.
std::vector<Int> spectrum_elements(const SpectrumGenerators& s);

// Exact group exponent. Branches:
// (a) linear/unitary, dim >= 3;
// (b) S_{2n} (n >= 2), O_{2n+1} (n >= 3, odd q), O^+_{2n+2} (n >= 3 odd),
//     O^-_{2n} (n >= 4 even): (v^l / c) prod_{i<=n} Phi_i(u^2);
// (c) O^{sign}_{2n}, n >= 5 odd: (v^l / (2,u-1)) Phi_n(sign u) prod_{i<n} Phi_i(u^2).
FactoredNat exponent(const GroupId& g);

// Exponent as a plain value (no factorization of the result).
Int exponent_value(const GroupId& g);

// a = (q^n + 1)/((q + 1)(n, q + 1)) - 1 for prime n >= 5 and odd q.
Int magr_value(unsigned long n, const Int& q);

struct MagrCheck {
  unsigned long n = 0;
  Int q;
  Int a;
  bool n_divides_q_plus_1 = false;
  bool n_part_ok = false;        // (a)_n == (q+1)_n, when n | q+1
  bool quotient_divides = false;  // (q+1)/n | a, when n | q+1
  bool membership_false = false;  // a not an element order of U_n(q)
  std::optional<Int> divisor_witness;  // p * (a primitive factor), when n does not divide q+1
};

MagrCheck magr_check(unsigned long n, const Int& q);

}  // namespace specrec
