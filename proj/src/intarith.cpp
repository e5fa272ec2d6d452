#include "specrec/intarith.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace specrec {

namespace {

constexpr std::uint32_t kSieveBound = 100000;

std::vector<std::uint32_t> build_sieve() {
  std::vector<bool> comp(kSieveBound + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= kSieveBound; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j <= kSieveBound; j += i) comp[j] = true;
    }
  }
  return out;
}

std::atomic<std::uint64_t> g_det_count{0};
std::atomic<std::uint64_t> g_bpsw_count{0};

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // a proves n composite
}

// Strong Lucas test with the first D = 5, -7, 9, ... giving Jacobi(D, n) = -1.
bool strong_lucas_prp(const Int& n) {
  Int d_abs = 5;
  int sign = 1;
  Int D;
  while (true) {
    D = sign > 0 ? d_abs : -d_abs;
    int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && d_abs < n) return false;
    d_abs += 2;
    sign = -sign;
  }
  // P = 1, Q = (1 - D) / 4
  Int Q = (1 - D) / 4;
  Int delta = n + 1;
  unsigned long s = mpz_scan1(delta.get_mpz_t(), 0);
  Int dd = delta >> s;

  Int U = 0, V = 2, Qk = 1;
  unsigned long bits = mpz_sizeinbase(dd.get_mpz_t(), 2);
  for (unsigned long i = bits; i-- > 0;) {
    // double: U_{2k} = U V, V_{2k} = V^2 - 2 Q^k
    U = (U * V) % n;
    V = (V * V - 2 * Qk) % n;
    Qk = (Qk * Qk) % n;
    if (mpz_tstbit(dd.get_mpz_t(), i)) {
      // add one: U' = (U + V)/2, V' = (D U + V)/2, parity fixed mod n
      Int U2 = U + V;
      if (mpz_odd_p(U2.get_mpz_t())) U2 += n;
      U2 = (U2 / 2) % n;
      Int V2 = D * U + V;
      if (mpz_odd_p(V2.get_mpz_t())) V2 += n;
      V2 = (V2 / 2) % n;
      U = U2;
      V = V2;
      Qk = (Qk * Q) % n;
    }
  }
  auto norm = [&](Int& x) {
    x %= n;
    if (x < 0) x += n;
  };
  norm(U);
  norm(V);
  norm(Qk);
  if (U == 0 || V == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    V = (V * V - 2 * Qk) % n;
    if (V < 0) V += n;
    if (V == 0) return true;
    Qk = (Qk * Qk) % n;
  }
  return false;
}

// Deterministic witness set below this bound (first 13 primes).
const Int& mr_deterministic_bound() {
  static const Int b("3317044064679887385961981");
  return b;
}

std::shared_mutex g_factor_mutex;
std::map<Int, FactoredNat> g_factor_cache;


// Brent's cycle-finding rho with deterministic parameters.
Int brent_rho(const Int& n, std::uint64_t budget, bool& exhausted) {
  exhausted = false;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    Int saved_y = y;
    std::uint64_t steps = 0;
    unsigned long power = 1, lam = 0;
    Int prod = 1;
    const unsigned batch = 128;
    unsigned in_batch = 0;
    while (d == 1) {
      if (lam == power) {
        x = y;
        power *= 2;
        lam = 0;
        saved_y = y;
      }
      y = (y * y + c) % n;
      ++lam;
      ++steps;
      Int diff = x - y;
      if (diff == 0) break;
      prod = (prod * diff) % n;
      if (++in_batch == batch) {
        d = gcd_int(prod, n);
        prod = 1;
        in_batch = 0;
        if (d == n) {
          // replay one by one from the saved point
          d = 1;
          Int yy = saved_y;
          while (d == 1) {
            yy = (yy * yy + c) % n;
            d = gcd_int(x - yy, n);
          }
          break;
        }
      }
      if (budget != 0 && steps > budget) {
        exhausted = true;
        return 1;
      }
    }
    if (in_batch > 0 && d == 1) d = gcd_int(prod, n);
    if (d > 1 && d < n) return d;
    // d == n or cycle degenerated: retry with next c
    if (c > 64) {
      exhausted = true;
      return 1;
    }
  }
}

void factor_into(const Int& n, FactoredNat& acc, std::vector<Int>& leftovers,
                 std::uint64_t budget);

void accumulate_prime(FactoredNat& acc, const Int& p, unsigned long e) {
  for (auto& [q, k] : acc.factors) {
    if (q == p) {
      k += e;
      return;
    }
  }
  acc.factors.emplace_back(p, e);
}

void factor_into(const Int& n, FactoredNat& acc, std::vector<Int>& leftovers,
                 std::uint64_t budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    accumulate_prime(acc, n, 1);
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        FactoredNat sub;
        factor_into(root, sub, leftovers, budget);
        for (auto& [p, e] : sub.factors) accumulate_prime(acc, p, e * k);
        return;
      }
    }
  }
  bool exhausted = false;
  Int d = brent_rho(n, budget, exhausted);
  if (exhausted || d == 1) {
    leftovers.push_back(n);
    return;
  }
  factor_into(d, acc, leftovers, budget);
  factor_into(n / d, acc, leftovers, budget);
}

PartialFactorization factorize_impl(const Int& n, std::uint64_t budget) {
  PartialFactorization out;
  out.factored_part.value = 1;
  Int rest = n;
  for (std::uint32_t p : small_primes()) {
    if (rest == 1) break;
    if (Int(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), Int(p).get_mpz_t());
      accumulate_prime(out.factored_part, p, e);
    }
  }
  if (rest > 1) {
    std::vector<Int> leftovers;
    factor_into(rest, out.factored_part, leftovers, budget);
    std::sort(leftovers.begin(), leftovers.end());
    out.composite = std::move(leftovers);
  }
  auto& f = out.factored_part.factors;
  std::sort(f.begin(), f.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Int v = 1;
  for (auto& [p, e] : f) v *= pow_int(p, e);
  out.factored_part.value = v;
  return out;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = build_sieve();
  return primes;
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

unsigned long valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Int rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const std::uint32_t small[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                        23, 29, 31, 37, 41, 43, 47};
  for (std::uint32_t p : small) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  if (n < mr_deterministic_bound()) {
    g_det_count.fetch_add(1, std::memory_order_relaxed);
    static const std::uint32_t witnesses[] = {2,  3,  5,  7,  11, 13, 17,
                                              19, 23, 29, 31, 37, 41};
    for (std::uint32_t a : witnesses) {
      if (miller_rabin_witness(n, Int(a), d, s)) return false;
    }
    return true;
  }
  g_bpsw_count.fetch_add(1, std::memory_order_relaxed);
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;
  if (miller_rabin_witness(n, Int(2), d, s)) return false;
  return strong_lucas_prp(n);
}

PrimalityStats primality_stats() {
  return {g_det_count.load(), g_bpsw_count.load()};
}

void reset_primality_stats() {
  g_det_count.store(0);
  g_bpsw_count.store(0);
}

std::string FactoredNat::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " . ";
    s += factors[i].first.get_str();
    if (factors[i].second > 1) {
      s += "^";
      s += std::to_string(factors[i].second);
    }
  }
  return s;
}

unsigned long FactoredNat::exponent_of(const Int& p) const {
  for (auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

std::vector<Int> FactoredNat::prime_support() const {
  std::vector<Int> out;
  out.reserve(factors.size());
  for (auto& [p, e] : factors) out.push_back(p);
  return out;
}

std::vector<Int> FactoredNat::divisors() const {
  double count = 1;
  for (auto& [p, e] : factors) count *= double(e + 1);
  if (count > 2e6) throw std::runtime_error("divisor list too large");
  std::vector<Int> out{1};
  for (auto& [p, e] : factors) {
    std::size_t base = out.size();
    Int pe = 1;
    for (unsigned long i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FactoredNat factored_one() { return FactoredNat{}; }

FactoredNat from_prime_power(const Int& p, unsigned long e) {
  FactoredNat f;
  if (e > 0) {
    f.factors.emplace_back(p, e);
    f.value = pow_int(p, e);
  }
  return f;
}

namespace {
FactoredNat merge(const FactoredNat& a, const FactoredNat& b,
                  unsigned long (*op)(unsigned long, unsigned long)) {
  FactoredNat out;
  std::size_t i = 0, j = 0;
  auto push = [&](const Int& p, unsigned long e) {
    if (e > 0) out.factors.emplace_back(p, e);
  };
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() ||
        (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
      push(a.factors[i].first, op(a.factors[i].second, 0));
      ++i;
    } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
      push(b.factors[j].first, op(0, b.factors[j].second));
      ++j;
    } else {
      push(a.factors[i].first, op(a.factors[i].second, b.factors[j].second));
      ++i;
      ++j;
    }
  }
  out.value = 1;
  for (auto& [p, e] : out.factors) out.value *= pow_int(p, e);
  return out;
}
}  // namespace

FactoredNat fn_multiply(const FactoredNat& a, const FactoredNat& b) {
  return merge(a, b, [](unsigned long x, unsigned long y) { return x + y; });
}

FactoredNat fn_lcm(const FactoredNat& a, const FactoredNat& b) {
  return merge(a, b, [](unsigned long x, unsigned long y) { return std::max(x, y); });
}

FactoredNat fn_gcd(const FactoredNat& a, const FactoredNat& b) {
  return merge(a, b, [](unsigned long x, unsigned long y) { return std::min(x, y); });
}

FactoredNat fn_divide(const FactoredNat& a, const FactoredNat& b) {
  for (auto& [p, e] : b.factors) {
    if (a.exponent_of(p) < e) throw std::domain_error("fn_divide: not divisible");
  }
  return merge(a, b, [](unsigned long x, unsigned long y) { return x - y; });
}

FactoredNat factorize(const Int& n) {
  if (n <= 0) throw std::domain_error("factorize: argument must be positive");
  if (n == 1) return factored_one();
  {
    std::shared_lock lk(g_factor_mutex);
    auto it = g_factor_cache.find(n);
    if (it != g_factor_cache.end()) return it->second;
  }
  PartialFactorization pf = factorize_impl(n, 0);
  if (!pf.complete()) throw std::runtime_error("factorize: rho failed unexpectedly");
  {
    std::unique_lock lk(g_factor_mutex);
    g_factor_cache.emplace(n, pf.factored_part);
  }
  return pf.factored_part;
}

PartialFactorization factorize_bounded(const Int& n, std::uint64_t rho_budget) {
  if (n <= 0) throw std::domain_error("factorize_bounded: argument must be positive");
  if (n == 1) return PartialFactorization{factored_one(), {}};
  {
    std::shared_lock lk(g_factor_mutex);
    auto it = g_factor_cache.find(n);
    if (it != g_factor_cache.end()) return PartialFactorization{it->second, {}};
  }
  PartialFactorization pf = factorize_impl(n, rho_budget);
  if (pf.complete()) {
    std::unique_lock lk(g_factor_mutex);
    g_factor_cache.emplace(n, pf.factored_part);
  }
  return pf;
}

Int pi_part(const Int& n, const std::vector<Int>& primes, bool complement) {
  if (n <= 0) throw std::domain_error("pi_part: argument must be positive");
  Int rest = n, kept = 1;
  for (const Int& p : primes) {
    Int removed;
    unsigned long e = mpz_remove(removed.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (e > 0) {
      kept *= pow_int(p, e);
      rest = removed;
    }
  }
  return complement ? rest : kept;
}

std::optional<std::pair<Int, unsigned long>> is_prime_power(const Int& n) {
  if (n <= 1) return std::nullopt;
  if (is_prime(n)) return std::make_pair(n, 1ul);
  unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = 2; k <= bits; ++k) {
    Int root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      if (is_prime(root)) return std::make_pair(root, k);
      auto sub = is_prime_power(root);
      if (sub) return std::make_pair(sub->first, sub->second * k);
      return std::nullopt;  // exact k-th power of a non prime power
    }
  }
  return std::nullopt;
}

bool is_odd_prime_power(const Int& n) {
  if (n <= 2 || mpz_even_p(n.get_mpz_t())) return false;
  return is_prime_power(n).has_value();
}

Int char_of(const Int& q) {
  auto pp = is_prime_power(q);
  if (!pp) throw std::domain_error("char_of: not a prime power");
  return pp->first;
}

unsigned long mult_order(const Int& r, const Int& a) {
  if (r == 2) {
    if (mpz_even_p(a.get_mpz_t())) throw std::domain_error("mult_order: even base for r=2");
    Int m = a % 4;
    if (m < 0) m += 4;
    return m == 1 ? 1 : 2;
  }
  if (!is_prime(r)) throw std::domain_error("mult_order: modulus not prime");
  Int am = a % r;
  if (am < 0) am += r;
  if (am == 0) throw std::domain_error("mult_order: base divisible by modulus");
  FactoredNat rm1 = factorize(r - 1);
  Int e = r - 1;
  for (auto& [p, k] : rm1.factors) {
    for (unsigned long i = 0; i < k; ++i) {
      Int cand = e / p;
      Int x;
      mpz_powm(x.get_mpz_t(), am.get_mpz_t(), cand.get_mpz_t(), r.get_mpz_t());
      if (x == 1)
        e = cand;
      else
        break;
    }
  }
  return mpz_get_ui(e.get_mpz_t());
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n, m = n;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

Int phi_sum(unsigned long m) {
  Int s = 0;
  for (unsigned long i = 1; i <= m; ++i) s += euler_phi(i);
  return s;
}

Int int_from_string(const std::string& s) { return Int(s); }

}  // namespace specrec
