#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "specrec/polyring.hpp"

using specrec::Int;
using specrec::IntPolynomial;

TEST_CASE("polynomial arithmetic basics") {
  IntPolynomial f({Int(-1), Int(0), Int(1)});  // x^2 - 1
  IntPolynomial g({Int(1), Int(1)});           // x + 1
  CHECK(f.degree() == 2);
  CHECK((f + g).eval(Int(3)) == 12);
  CHECK((f - g).eval(Int(3)) == 4);
  CHECK((f * g).degree() == 3);
  CHECK(specrec::poly_divexact(f, g) == IntPolynomial({Int(-1), Int(1)}));
  CHECK_THROWS(specrec::poly_divexact(IntPolynomial({Int(1), Int(1), Int(1)}), g));
  CHECK(f.negate_argument() == f);
  CHECK(g.negate_argument() == IntPolynomial({Int(1), Int(-1)}));
  CHECK(f.shift_argument(Int(2)) == IntPolynomial({Int(3), Int(4), Int(1)}));
  CHECK(IntPolynomial({Int(6), Int(-9), Int(12)}).content() == 3);
  CHECK(IntPolynomial({Int(0), Int(-4), Int(-8)}).primitive_part() ==
        IntPolynomial({Int(0), Int(1), Int(2)}));
}

TEST_CASE("cyclotomic coefficients match long-division references") {
  for (unsigned long i = 1; i <= 110; ++i) {
    IntPolynomial fast = specrec::cyclotomic(i);
    const std::vector<Int>& slow = oracles::cyclotomic_brute(i);
    REQUIRE(fast.coefficients() == slow);
  }
  // the first index with a coefficient outside {-1, 0, 1}
  CHECK(specrec::cyclotomic(105)[7] == -2);
}

TEST_CASE("cyclotomic evaluation and sign substitution") {
  CHECK(specrec::cyclotomic(7).eval(Int(-3)) == 547);
  CHECK(specrec::cyclotomic(7, -1).eval(Int(3)) == 547);
  CHECK(specrec::cyclotomic(1, -1) == IntPolynomial({Int(-1), Int(-1)}));
  for (unsigned long i = 2; i <= 30; ++i)
    for (long x : {-5, -2, 2, 3, 10}) {
      Int direct = specrec::cyclotomic(i).eval(Int(x));
      CHECK(specrec::cyclotomic(i, -1).eval(Int(-x)) == direct);
      CHECK(oracles::eval_poly(oracles::cyclotomic_brute(i), Int(x)) == direct);
    }
}

TEST_CASE("cyclotomics multiply back to power minus one") {
  for (unsigned long n : {6ul, 12ul, 30ul, 48ul, 60ul}) {
    IntPolynomial prod = IntPolynomial::constant(Int(1));
    for (unsigned long d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * specrec::cyclotomic(d);
    std::vector<Int> expect(n + 1, Int(0));
    expect[0] = -1;
    expect[n] = 1;
    CHECK(prod == IntPolynomial(expect));
  }
}

TEST_CASE("cyclotomic products track degree sums") {
  for (unsigned long m : {3ul, 8ul, 13ul}) {
    for (int sign : {1, -1}) {
      IntPolynomial prod = specrec::cyclotomic_product(m, sign);
      CHECK(prod.degree() == specrec::phi_sum(m));
      Int direct = 1;
      for (unsigned long i = 1; i <= m; ++i)
        direct *= specrec::cyclotomic(i).eval(Int(sign) * 7);
      CHECK(prod.eval(Int(7)) == direct);
    }
  }
}

TEST_CASE("primitive polynomial gcd") {
  IntPolynomial f = specrec::cyclotomic(12) * specrec::cyclotomic(4) * Int(6);
  IntPolynomial g = specrec::cyclotomic(12) * specrec::cyclotomic(3) * Int(-10);
  CHECK(specrec::poly_gcd_primitive(f, g) == specrec::cyclotomic(12));
  IntPolynomial coprime = specrec::poly_gcd_primitive(specrec::cyclotomic(5),
                                                      specrec::cyclotomic(7));
  CHECK(coprime == IntPolynomial::constant(Int(1)));
}

TEST_CASE("integral gcd produces a verified combination") {
  for (auto [i, j] : {std::pair<unsigned long, unsigned long>{5, 7},
                      {4, 6},
                      {9, 12},
                      {8, 14}}) {
    IntPolynomial f = specrec::cyclotomic(i);
    IntPolynomial g = specrec::cyclotomic(j);
    specrec::IntegralGcd got = specrec::integral_gcd(f, g);
    CHECK(got.content > 0);
    IntPolynomial combo = got.a_witness * f + got.b_witness * g;
    CHECK(combo == got.common * got.content);
  }
  // shared factor: gcd of x^6 - 1 and x^4 - 1 is x^2 - 1
  IntPolynomial a({Int(-1), Int(0), Int(0), Int(0), Int(0), Int(0), Int(1)});
  IntPolynomial b({Int(-1), Int(0), Int(0), Int(0), Int(1)});
  specrec::IntegralGcd shared = specrec::integral_gcd(a, b);
  CHECK(shared.common == IntPolynomial({Int(-1), Int(0), Int(1)}));
  CHECK(shared.content == 1);
}

TEST_CASE("lattice membership distinguishes contents") {
  IntPolynomial f = specrec::cyclotomic(1);   // x - 1
  IntPolynomial g = specrec::cyclotomic(2);   // x + 1
  // combinations of x-1 and x+1 reach 2 but never 1
  CHECK(specrec::lattice_contains(f, g, IntPolynomial::constant(Int(2))));
  CHECK_FALSE(specrec::lattice_contains(f, g, IntPolynomial::constant(Int(1))));
  CHECK(specrec::lattice_contains(f, g, f * Int(3) + g * Int(5)));
}

TEST_CASE("floor certificates exist for every supported degree") {
  for (unsigned long m = 3; m <= 24; ++m) {
    std::vector<specrec::PhiInequalityCertificate> certs =
        specrec::verify_phi_inequality(m);
    REQUIRE(certs.size() == 2);
    for (const auto& c : certs) {
      CHECK(c.m == m);
      CHECK((c.sign == 1 || c.sign == -1));
      CHECK(c.shift >= 2);
      // certificate + direct points must cover every integer from 2 up
      CHECK(Int(2) + static_cast<long>(c.points_checked) >= c.shift);
    }
  }
  CHECK_THROWS_AS((void)specrec::verify_phi_inequality(2), std::range_error);
  CHECK_THROWS_AS((void)specrec::verify_phi_inequality(25), std::range_error);
}

TEST_CASE("floor inequality holds pointwise on a sample grid") {
  for (unsigned long m : {3ul, 10ul, 17ul, 24ul})
    for (int sign : {1, -1})
      for (long u = 2; u <= 40; ++u) {
        Int prod = 1;
        for (unsigned long i = 1; i <= m; ++i)
          prod *= oracles::eval_poly(oracles::cyclotomic_brute(i),
                                     Int(sign) * u);
        Int floor = specrec::pow_int(Int(u), mpz_get_ui(
            Int(specrec::phi_sum(m) - 2).get_mpz_t()));
        CHECK(abs(prod) > floor);
      }
}
