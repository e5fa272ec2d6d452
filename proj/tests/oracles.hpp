#pragma once

// Slow reference implementations used only by the tests. Everything here is
// deliberately naive: exhaustive permutation/matrix enumeration for small
// group spectra, gcd stripping for primitive parts, schoolbook long division
// for cyclotomic coefficients. Nothing below shares code with the library
// paths it checks.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "specrec/intarith.hpp"

namespace oracles {

using specrec::Int;

struct SpectrumSample {
  std::set<unsigned long> orders;
  unsigned long exponent = 1;
  std::size_t group_size = 0;
};

// ---- element orders of the alternating group on five points ----

inline std::set<unsigned long> alternating5_orders() {
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  const std::array<int, 5> identity{0, 1, 2, 3, 4};
  std::set<unsigned long> orders;
  do {
    int inversions = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2 != 0) continue;
    std::array<int, 5> walk = perm;
    unsigned long order = 1;
    while (walk != identity) {
      std::array<int, 5> next{};
      for (int i = 0; i < 5; ++i) next[i] = perm[static_cast<std::size_t>(walk[i])];
      walk = next;
      ++order;
    }
    orders.insert(order);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return orders;
}

// ---- invertible 3x3 matrices over the two-element field ----

using Mat3F2 = std::array<std::array<int, 3>, 3>;

inline Mat3F2 mul_f2(const Mat3F2& a, const Mat3F2& b) {
  Mat3F2 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s ^= a[i][k] & b[k][j];
      c[i][j] = s;
    }
  return c;
}

inline SpectrumSample gl3_f2_sample() {
  Mat3F2 id{};
  for (int i = 0; i < 3; ++i) id[i][i] = 1;
  SpectrumSample out;
  for (unsigned mask = 0; mask < 512; ++mask) {
    Mat3F2 m{};
    for (int bit = 0; bit < 9; ++bit) m[bit / 3][bit % 3] = (mask >> bit) & 1;
    int det = (m[0][0] & ((m[1][1] & m[2][2]) ^ (m[1][2] & m[2][1]))) ^
              (m[0][1] & ((m[1][0] & m[2][2]) ^ (m[1][2] & m[2][0]))) ^
              (m[0][2] & ((m[1][0] & m[2][1]) ^ (m[1][1] & m[2][0])));
    if (det == 0) continue;
    Mat3F2 walk = m;
    unsigned long order = 1;
    while (walk != id) {
      walk = mul_f2(walk, m);
      ++order;
    }
    out.orders.insert(order);
    out.exponent = static_cast<unsigned long>(
        std::lcm(out.exponent, order));
    ++out.group_size;
  }
  return out;
}

// ---- the special unitary group of 3x3 matrices over the nine-element field ----
//
// The field is F_3[t]/(t^2+1), elements encoded as a + 3b for a + b t. The
// field involution is the cube map, which sends t to -t. A matrix belongs to
// the group when its columns are orthonormal for h(u, v) = sum u_i conj(v_i)
// and its determinant is 1. The centre is trivial here, so the order set is
// also the order set of the simple quotient.

namespace detail {

struct F9 {
  std::array<std::array<int, 9>, 9> add{};
  std::array<std::array<int, 9>, 9> mul{};
  std::array<int, 9> neg{};
  std::array<int, 9> conj{};

  F9() {
    for (int x = 0; x < 9; ++x) {
      int a = x % 3, b = x / 3;
      neg[x] = (3 - a) % 3 + 3 * ((3 - b) % 3);
      conj[x] = a + 3 * ((3 - b) % 3);
      for (int y = 0; y < 9; ++y) {
        int c = y % 3, d = y / 3;
        add[x][y] = (a + c) % 3 + 3 * ((b + d) % 3);
        // (a + bt)(c + dt) with t^2 = -1
        int re = (a * c + 2 * b * d) % 3;
        int im = (a * d + b * c) % 3;
        mul[x][y] = re + 3 * im;
      }
    }
  }
};

using Vec3F9 = std::array<int, 3>;
using Mat3F9 = std::array<Vec3F9, 3>;  // columns

inline int herm(const F9& f, const Vec3F9& u, const Vec3F9& v) {
  int s = 0;
  for (int i = 0; i < 3; ++i) s = f.add[s][f.mul[u[i]][f.conj[v[i]]]];
  return s;
}

inline int det3(const F9& f, const Mat3F9& m) {
  auto at = [&](int r, int c) { return m[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]; };
  auto minor2 = [&](int r1, int c1, int r2, int c2) {
    return f.add[f.mul[at(r1, c1)][at(r2, c2)]]
                [f.neg[f.mul[at(r1, c2)][at(r2, c1)]]];
  };
  int s = f.mul[at(0, 0)][minor2(1, 1, 2, 2)];
  s = f.add[s][f.neg[f.mul[at(0, 1)][minor2(1, 0, 2, 2)]]];
  s = f.add[s][f.mul[at(0, 2)][minor2(1, 0, 2, 1)]];
  return s;
}

inline Mat3F9 matmul(const F9& f, const Mat3F9& a, const Mat3F9& b) {
  Mat3F9 c{};
  for (int col = 0; col < 3; ++col)
    for (int row = 0; row < 3; ++row) {
      int s = 0;
      for (int k = 0; k < 3; ++k)
        s = f.add[s][f.mul[a[static_cast<std::size_t>(k)][static_cast<std::size_t>(row)]]
                          [b[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)]]];
      c[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)] = s;
    }
  return c;
}

}  // namespace detail

inline SpectrumSample su3_f3_sample() {
  const detail::F9 f;
  std::vector<detail::Vec3F9> all;
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y)
      for (int z = 0; z < 9; ++z) all.push_back({x, y, z});

  std::vector<detail::Vec3F9> unit;
  for (const auto& v : all)
    if (detail::herm(f, v, v) == 1) unit.push_back(v);

  detail::Mat3F9 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  SpectrumSample out;
  for (const auto& c1 : unit)
    for (const auto& c2 : unit) {
      if (detail::herm(f, c2, c1) != 0) continue;
      for (const auto& c3 : unit) {
        if (detail::herm(f, c3, c1) != 0 || detail::herm(f, c3, c2) != 0)
          continue;
        detail::Mat3F9 m{c1, c2, c3};
        if (detail::det3(f, m) != 1) continue;
        detail::Mat3F9 walk = m;
        unsigned long order = 1;
        while (walk != id) {
          walk = detail::matmul(f, walk, m);
          ++order;
        }
        out.orders.insert(order);
        out.exponent = static_cast<unsigned long>(std::lcm(out.exponent, order));
        ++out.group_size;
      }
    }
  return out;
}

// ---- primitive part of base^index - 1 by gcd stripping ----
//
// Strips from |base^index - 1| every prime shared with some smaller
// |base^j - 1|. A prime survives exactly when its multiplicative order at
// base is the full index, and it survives with its whole multiplicity.

inline Int primitive_part_brute(const Int& base, unsigned long index) {
  Int big = specrec::pow_int(base, index) - 1;
  big = abs(big);
  if (big == 0) throw std::domain_error("degenerate base");
  for (unsigned long j = 1; j < index; ++j) {
    Int low = specrec::pow_int(base, j) - 1;
    low = abs(low);
    if (low <= 1) continue;
    for (Int g = specrec::gcd_int(big, low); g > 1;
         g = specrec::gcd_int(big, low))
      big /= g;
  }
  return big;
}

// ---- cyclotomic coefficients by long division ----

inline std::vector<Int> poly_divexact_monic(std::vector<Int> num,
                                            const std::vector<Int>& den) {
  if (den.empty() || den.back() != 1)
    throw std::invalid_argument("denominator must be monic");
  if (num.size() < den.size()) throw std::invalid_argument("degree underflow");
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Int c = num[k + den.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < den.size(); ++i)
      num[k + i] -= c * den[i];
  }
  for (const Int& c : num)
    if (c != 0) throw std::invalid_argument("division not exact");
  return quot;
}

inline const std::vector<Int>& cyclotomic_brute(unsigned long i) {
  static std::map<unsigned long, std::vector<Int>> cache;
  auto it = cache.find(i);
  if (it != cache.end()) return it->second;
  std::vector<Int> num(i + 1, Int(0));
  num[0] = -1;
  num[i] = 1;
  for (unsigned long d = 1; d < i; ++d)
    if (i % d == 0) num = poly_divexact_monic(num, cyclotomic_brute(d));
  return cache.emplace(i, std::move(num)).first->second;
}

inline Int eval_poly(const std::vector<Int>& coef, const Int& x) {
  Int acc = 0;
  for (std::size_t k = coef.size(); k-- > 0;) acc = acc * x + coef[k];
  return acc;
}

// ---- plain factorization ----

inline std::vector<std::pair<Int, unsigned long>> trial_factor(Int n) {
  if (n <= 0) throw std::domain_error("positive values only");
  std::vector<std::pair<Int, unsigned long>> out;
  for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned long e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline unsigned long euler_phi_brute(unsigned long n) {
  unsigned long count = 0;
  for (unsigned long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

}  // namespace oracles
