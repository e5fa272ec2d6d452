#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "oracles.hpp"
#include "specrec/intarith.hpp"

using specrec::FactoredNat;
using specrec::Int;

TEST_CASE("factorize agrees with trial division on random values") {
  std::mt19937_64 rng(2026);
  for (int round = 0; round < 200; ++round) {
    Int n = Int(static_cast<unsigned long>(rng() % 999999999999ULL + 2));
    FactoredNat fast = specrec::factorize(n);
    auto slow = oracles::trial_factor(n);
    REQUIRE(fast.value == n);
    REQUIRE(fast.factors.size() == slow.size());
    for (std::size_t i = 0; i < slow.size(); ++i) {
      CHECK(fast.factors[i].first == slow[i].first);
      CHECK(fast.factors[i].second == slow[i].second);
    }
  }
}

TEST_CASE("factorize handles structured values") {
  // primorial, power, prime, semiprime with large parts
  FactoredNat primorial = specrec::factorize(Int(223092870));  // 2*3*5*7*11*13*17*19*23
  CHECK(primorial.factors.size() == 9);
  CHECK(primorial.factors.back().first == 23);

  FactoredNat pow = specrec::factorize(specrec::pow_int(Int(3), 40));
  REQUIRE(pow.factors.size() == 1);
  CHECK(pow.factors[0].first == 3);
  CHECK(pow.factors[0].second == 40);

  Int p1("1000000007"), p2("1000000009");
  FactoredNat semi = specrec::factorize(p1 * p2);
  REQUIRE(semi.factors.size() == 2);
  CHECK(semi.factors[0].first == p1);
  CHECK(semi.factors[1].first == p2);
}

TEST_CASE("factored rendering uses dot-separated prime powers") {
  CHECK(specrec::factorize(Int(547)).to_string() == "547");
  CHECK(specrec::factorize(Int(1176)).to_string() == "2^3 . 3 . 7^2");
  CHECK(specrec::factored_one().to_string() == "1");
}

TEST_CASE("is_prime matches trial division exhaustively below 100000") {
  for (unsigned long n = 2; n < 100000; ++n) {
    Int v(n);
    bool slow = oracles::trial_factor(v).size() == 1 &&
                oracles::trial_factor(v)[0].second == 1;
    CHECK(specrec::is_prime(v) == slow);
  }
  CHECK_FALSE(specrec::is_prime(Int(1)));
}

TEST_CASE("divisors are sorted and complete") {
  FactoredNat f = specrec::factorize(Int(720));
  std::vector<Int> divs = f.divisors();
  CHECK(divs.size() == 30);
  CHECK(std::is_sorted(divs.begin(), divs.end()));
  for (const Int& d : divs) CHECK(Int(720) % d == 0);
  CHECK(divs.front() == 1);
  CHECK(divs.back() == 720);
}

TEST_CASE("valuation and prime-part extraction") {
  CHECK(specrec::valuation(Int(48), Int(2)) == 4);
  CHECK(specrec::valuation(Int(48), Int(3)) == 1);
  CHECK(specrec::valuation(Int(49), Int(2)) == 0);
  CHECK(specrec::pi_part(Int(720), {Int(2), Int(3)}) == 144);
  CHECK(specrec::pi_part(Int(720), {Int(2), Int(3)}, true) == 5);
}

TEST_CASE("prime power recognition") {
  auto pp = specrec::is_prime_power(Int(1024));
  REQUIRE(pp.has_value());
  CHECK(pp->first == 2);
  CHECK(pp->second == 10);

  auto big = specrec::is_prime_power(specrec::pow_int(Int(3), 20));
  REQUIRE(big.has_value());
  CHECK(big->first == 3);
  CHECK(big->second == 20);

  CHECK_FALSE(specrec::is_prime_power(Int(6)).has_value());
  CHECK_FALSE(specrec::is_prime_power(Int(1)).has_value());
  CHECK(specrec::is_odd_prime_power(Int(27)));
  CHECK_FALSE(specrec::is_odd_prime_power(Int(16)));
  CHECK(specrec::char_of(Int(2401)) == 7);
}

TEST_CASE("multiplicative order conventions") {
  CHECK(specrec::mult_order(Int(547), Int(-3)) == 7);
  CHECK(specrec::mult_order(Int(7), Int(2)) == 3);
  CHECK(specrec::mult_order(Int(2), Int(5)) == 1);   // 5 = 1 mod 4
  CHECK(specrec::mult_order(Int(2), Int(7)) == 2);   // 7 = 3 mod 4
  CHECK_THROWS_AS((void)specrec::mult_order(Int(3), Int(6)), std::domain_error);
}

TEST_CASE("totient helpers agree with counting") {
  for (unsigned long n = 1; n <= 120; ++n)
    CHECK(specrec::euler_phi(n) == oracles::euler_phi_brute(n));
  Int sum = 0;
  for (unsigned long i = 1; i <= 24; ++i) {
    sum += oracles::euler_phi_brute(i);
    CHECK(specrec::phi_sum(i) == sum);
  }
  CHECK(specrec::phi_sum(24) == 180);
}

TEST_CASE("bounded factorization reports leftover cofactors") {
  Int p1("1000000000000000003"), p2("1000000000000000009");
  specrec::PartialFactorization part =
      specrec::factorize_bounded(Int(12) * p1 * p2, 1);
  CHECK_FALSE(part.complete());
  CHECK(part.factored_part.exponent_of(Int(2)) == 2);
  CHECK(part.factored_part.exponent_of(Int(3)) == 1);
  Int leftover = 1;
  for (const Int& c : part.composite) leftover *= c;
  CHECK(part.factored_part.value * leftover == Int(12) * p1 * p2);

  specrec::PartialFactorization full = specrec::factorize_bounded(Int(5040), 1);
  CHECK(full.complete());
  CHECK(full.factored_part.value == 5040);
}

TEST_CASE("factored arithmetic keeps value and factors consistent") {
  FactoredNat a = specrec::factorize(Int(84));
  FactoredNat b = specrec::factorize(Int(90));
  FactoredNat prod = specrec::fn_multiply(a, b);
  CHECK(prod.value == 84 * 90);
  FactoredNat l = specrec::fn_lcm(a, b);
  CHECK(l.value == 1260);
  FactoredNat g = specrec::fn_gcd(a, b);
  CHECK(g.value == 6);
  FactoredNat q = specrec::fn_divide(prod, b);
  CHECK(q.value == 84);
  for (const auto& f : {prod, l, g, q}) {
    Int rebuilt = 1;
    for (const auto& [p, e] : f.factors) rebuilt *= specrec::pow_int(p, e);
    CHECK(rebuilt == f.value);
  }
}

TEST_CASE("input guards") {
  CHECK_THROWS_AS((void)specrec::factorize(Int(0)), std::domain_error);
  CHECK_THROWS_AS((void)specrec::factorize(Int(-5)), std::domain_error);
  CHECK(specrec::int_from_string("-99") == -99);
  CHECK_THROWS(specrec::int_from_string("12x"));
}
