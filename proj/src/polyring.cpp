#include "specrec/polyring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace specrec {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Int> coef) : coef_(std::move(coef)) { trim(); }

IntPolynomial IntPolynomial::constant(const Int& c) {
  return IntPolynomial(std::vector<Int>{c});
}

IntPolynomial IntPolynomial::monomial(const Int& c, std::size_t deg) {
  std::vector<Int> v(deg + 1, Int(0));
  v[deg] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

const Int& IntPolynomial::operator[](std::size_t i) const {
  return i < coef_.size() ? coef_[i] : kZero;
}

const Int& IntPolynomial::leading() const {
  if (coef_.empty()) return kZero;
  return coef_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> v(std::max(coef_.size(), o.coef_.size()), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] + o[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> v(std::max(coef_.size(), o.coef_.size()), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] - o[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Int> v(coef_.size() + o.coef_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coef_.size(); ++j) v[i + j] += coef_[i] * o.coef_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const Int& c) const {
  if (c == 0) return IntPolynomial();
  std::vector<Int> v = coef_;
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const { return *this * Int(-1); }

Int IntPolynomial::eval(const Int& x) const {
  Int r = 0;
  for (std::size_t i = coef_.size(); i-- > 0;) r = r * x + coef_[i];
  return r;
}

IntPolynomial IntPolynomial::negate_argument() const {
  std::vector<Int> v = coef_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shift_argument(const Int& s) const {
  // Horner: p(x+s) built from the top coefficient down.
  IntPolynomial result;
  IntPolynomial xs({s, Int(1)});
  for (std::size_t i = coef_.size(); i-- > 0;) {
    result = result * xs + IntPolynomial::constant(coef_[i]);
  }
  return result;
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const auto& c : coef_) g = gcd_int(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return IntPolynomial();
  Int g = content();
  if (leading() < 0) g = -g;
  std::vector<Int> v = coef_;
  for (auto& x : v) x /= g;
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = coef_.size(); i-- > 0;) {
    if (coef_[i] == 0) continue;
    if (!s.empty()) s += coef_[i] > 0 ? " + " : " - ";
    else if (coef_[i] < 0)
      s += "-";
    Int a = abs(coef_[i]);
    bool show_coef = (a != 1) || i == 0;
    if (show_coef) s += a.get_str();
    if (i > 0) {
      if (show_coef) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

IntPolynomial poly_divexact(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("poly_divexact: zero divisor");
  if (num.is_zero()) return IntPolynomial();
  long dn = num.degree(), dd = den.degree();
  if (dn < dd) throw std::domain_error("poly_divexact: not divisible");
  std::vector<Int> rem = num.coefficients();
  std::vector<Int> quo(dn - dd + 1, Int(0));
  for (long i = dn - dd; i >= 0; --i) {
    Int top = rem[i + dd];
    if (top == 0) continue;
    Int q = top / den.leading();
    if (q * den.leading() != top) throw std::domain_error("poly_divexact: not divisible");
    quo[i] = q;
    for (long j = 0; j <= dd; ++j) rem[i + j] -= q * den[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::domain_error("poly_divexact: nonzero remainder");
  return IntPolynomial(std::move(quo));
}

namespace {
std::mutex g_cyclo_mutex;
std::map<unsigned long, IntPolynomial> g_cyclo_cache;
}  // namespace

IntPolynomial cyclotomic(unsigned long i) {
  if (i == 0) throw std::domain_error("cyclotomic: index must be positive");
  {
    std::lock_guard lk(g_cyclo_mutex);
    auto it = g_cyclo_cache.find(i);
    if (it != g_cyclo_cache.end()) return it->second;
  }
  std::vector<Int> xn(i + 1, Int(0));
  xn[0] = -1;
  xn[i] = 1;
  IntPolynomial num{std::move(xn)};
  for (unsigned long d = 1; d < i; ++d) {
    if (i % d == 0) num = poly_divexact(num, cyclotomic(d));
  }
  std::lock_guard lk(g_cyclo_mutex);
  g_cyclo_cache.emplace(i, num);
  return num;
}

IntPolynomial cyclotomic(unsigned long i, int sign) {
  if (sign != 1 && sign != -1) throw std::domain_error("cyclotomic: sign must be +-1");
  IntPolynomial p = cyclotomic(i);
  return sign == 1 ? p : p.negate_argument();
}

IntPolynomial cyclotomic_product(unsigned long m, int sign) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (unsigned long i = 1; i <= m; ++i) p = p * cyclotomic(i, sign);
  return p;
}

namespace {
// num * lead(den)^(deg num - deg den + 1) divided by den, remainder returned.
IntPolynomial pseudo_remainder(const IntPolynomial& num, const IntPolynomial& den) {
  long dn = num.degree(), dd = den.degree();
  Int l = den.leading();
  std::vector<Int> rem = num.coefficients();
  for (long i = dn; i >= dd; --i) {
    Int top = rem[i];
    for (auto& c : rem) c *= l;
    if (top != 0) {
      for (long j = 0; j <= dd; ++j) rem[i + j - dd] -= top * den[j];
    }
    rem[i] = 0;  // guard against residue from the scaling step
  }
  return IntPolynomial(std::move(rem));
}
}  // namespace

IntPolynomial poly_gcd_primitive(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero()) return g.is_zero() ? IntPolynomial() : g.primitive_part();
  if (g.is_zero()) return f.primitive_part();
  IntPolynomial a = f.primitive_part(), b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = b;
    b = r.is_zero() ? IntPolynomial() : r.primitive_part();
  }
  return a.primitive_part();
}

namespace {

struct HnfResult {
  std::vector<std::vector<Int>> rows;       // echelon form, zero rows removed
  std::vector<std::vector<Int>> transform;  // same combinations of the inputs
  std::vector<long> pivot_col;              // per surviving row
};

HnfResult hermite_form(std::vector<std::vector<Int>> m, bool track) {
  std::size_t r = m.size();
  std::size_t c = r ? m[0].size() : 0;
  std::vector<std::vector<Int>> u;
  if (track) {
    u.assign(r, std::vector<Int>(r, Int(0)));
    for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;
  }
  auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < c; ++j) m[dst][j] -= q * m[src][j];
    if (track)
      for (std::size_t j = 0; j < r; ++j) u[dst][j] -= q * u[src][j];
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(m[i], m[j]);
    if (track) std::swap(u[i], u[j]);
  };
  auto row_negate = [&](std::size_t i) {
    for (auto& x : m[i]) x = -x;
    if (track)
      for (auto& x : u[i]) x = -x;
  };

  std::size_t pr = 0;
  std::vector<long> pivots;
  for (std::size_t col = 0; col < c && pr < r; ++col) {
    while (true) {
      std::size_t best = r;
      for (std::size_t i = pr; i < r; ++i) {
        if (m[i][col] == 0) continue;
        if (best == r || abs(m[i][col]) < abs(m[best][col])) best = i;
      }
      if (best == r) break;
      row_swap(pr, best);
      bool clean = true;
      for (std::size_t i = pr + 1; i < r; ++i) {
        if (m[i][col] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[pr][col].get_mpz_t());
        row_sub(i, pr, q);
        if (m[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[pr][col] == 0) continue;
    if (m[pr][col] < 0) row_negate(pr);
    for (std::size_t i = 0; i < pr; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[pr][col].get_mpz_t());
      row_sub(i, pr, q);
    }
    pivots.push_back(static_cast<long>(col));
    ++pr;
  }
  HnfResult out;
  out.rows.assign(m.begin(), m.begin() + pr);
  if (track) out.transform.assign(u.begin(), u.begin() + pr);
  out.pivot_col = std::move(pivots);
  return out;
}

// Sylvester-style generator rows for the lattice {A f + B g} with combination
// degree < deg f + deg g. Columns are indexed by descending degree. Also
// reports which original generator each row is (x^j * f or x^j * g).
struct LatticeRows {
  std::vector<std::vector<Int>> rows;
  std::vector<std::pair<bool, std::size_t>> tags;  // (is_f, shift j)
  std::size_t width;
};

LatticeRows build_lattice_rows(const IntPolynomial& f, const IntPolynomial& g) {
  long df = f.degree(), dg = g.degree();
  if (df < 0 || dg < 0) throw std::domain_error("lattice rows: zero polynomial");
  std::size_t width = static_cast<std::size_t>(df + dg);
  if (width == 0) width = 1;  // two nonzero constants
  LatticeRows out;
  out.width = width;
  auto add = [&](const IntPolynomial& p, std::size_t j, bool is_f) {
    std::vector<Int> row(width, Int(0));
    for (long k = 0; k <= p.degree(); ++k) {
      std::size_t deg = static_cast<std::size_t>(k) + j;
      row[width - 1 - deg] = p[static_cast<std::size_t>(k)];
    }
    out.rows.push_back(std::move(row));
    out.tags.emplace_back(is_f, j);
  };
  // Any A f + B g of degree < deg f + deg g rewrites with deg A < deg g and
  // deg B < deg f, so these rows generate the whole truncated lattice.
  std::size_t f_rows = static_cast<std::size_t>(dg);
  std::size_t g_rows = static_cast<std::size_t>(df);
  if (df == 0 && dg == 0) f_rows = g_rows = 1;
  for (std::size_t j = f_rows; j-- > 0;) add(f, j, true);
  for (std::size_t j = g_rows; j-- > 0;) add(g, j, false);
  return out;
}

}  // namespace

IntegralGcd integral_gcd(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw std::domain_error("integral_gcd: zero polynomial");
  IntPolynomial G = poly_gcd_primitive(f, g);
  IntPolynomial f1 = f, g1 = g;
  if (G.degree() > 0) {
    f1 = poly_divexact(f, G);
    g1 = poly_divexact(g, G);
  } else {
    G = IntPolynomial::constant(1);
  }
  LatticeRows lat = build_lattice_rows(f1, g1);
  HnfResult h = hermite_form(lat.rows, true);
  // The constant lattice is generated by the row whose pivot is the last column.
  std::size_t idx = h.rows.size();
  for (std::size_t i = 0; i < h.rows.size(); ++i) {
    if (h.pivot_col[i] == static_cast<long>(lat.width) - 1) idx = i;
  }
  if (idx == h.rows.size())
    throw std::runtime_error("integral_gcd: no constant in lattice (inputs not coprime?)");
  Int c = h.rows[idx].back();
  IntPolynomial A, B;
  for (std::size_t j = 0; j < lat.tags.size(); ++j) {
    const Int& coef = h.transform[idx][j];
    if (coef == 0) continue;
    IntPolynomial term = IntPolynomial::monomial(coef, lat.tags[j].second);
    if (lat.tags[j].first)
      A = A + term;
    else
      B = B + term;
  }
  IntegralGcd out{c, G, A, B};
  if (A * f + B * g != G * c)
    throw std::runtime_error("integral_gcd: witness identity failed");
  return out;
}

bool lattice_contains(const IntPolynomial& f, const IntPolynomial& g,
                      const IntPolynomial& target) {
  LatticeRows lat = build_lattice_rows(f, g);
  HnfResult h = hermite_form(lat.rows, false);
  std::vector<Int> t(lat.width, Int(0));
  if (target.degree() >= static_cast<long>(lat.width)) return false;
  for (long k = 0; k <= target.degree(); ++k)
    t[lat.width - 1 - static_cast<std::size_t>(k)] = target[static_cast<std::size_t>(k)];
  std::size_t row = 0;
  for (std::size_t col = 0; col < lat.width; ++col) {
    bool has_pivot = row < h.rows.size() && h.pivot_col[row] == static_cast<long>(col);
    if (t[col] == 0) {
      if (has_pivot) ++row;
      continue;
    }
    if (!has_pivot) return false;
    Int q = t[col] / h.rows[row][col];
    if (q * h.rows[row][col] != t[col]) return false;
    for (std::size_t j = col; j < lat.width; ++j) t[j] -= q * h.rows[row][j];
    ++row;
  }
  return std::all_of(t.begin(), t.end(), [](const Int& x) { return x == 0; });
}

std::vector<PhiInequalityCertificate> verify_phi_inequality(unsigned long m) {
  if (m < 3 || m > 24) throw std::range_error("verify_phi_inequality: m must be in 3..24");
  unsigned long e = mpz_get_ui(Int(phi_sum(m) - 2).get_mpz_t());
  std::vector<PhiInequalityCertificate> out;
  for (int sign : {1, -1}) {
    IntPolynomial diff = cyclotomic_product(m, sign) - IntPolynomial::monomial(1, e);
    Int shift = 0;
    for (Int b = 2; b <= 64; ++b) {
      IntPolynomial shifted = diff.shift_argument(b);
      bool ok = shifted.eval(0) > 0;
      for (const auto& c : shifted.coefficients()) {
        if (c < 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        shift = b;
        break;
      }
    }
    if (shift == 0)
      throw std::runtime_error("verify_phi_inequality: no shift certificate found");
    std::size_t points = 0;
    for (Int u = 2; u < shift; ++u) {
      if (diff.eval(u) <= 0)
        throw std::runtime_error("verify_phi_inequality: pointwise check failed");
      ++points;
    }
    out.push_back({m, sign, shift, points});
  }
  return out;
}

}  // namespace specrec
