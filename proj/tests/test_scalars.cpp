#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cinf/bernoulli.hpp"
#include "cinf/rational.hpp"
#include "cinf/unipoly.hpp"

using cinf::Rational;
using cinf::UniPoly;

TEST_CASE("rationals are reduced with positive denominator") {
  const Rational r(cinf::BigInt(6), cinf::BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0).denominator() == 1);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(7).str() == "7");
}

TEST_CASE("parse round trips") {
  for (const char* s : {"0", "5", "-5", "3/4", "-12/7"}) CHECK(Rational::parse(s).str() == s);
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("factorial and binomial") {
  CHECK(cinf::factorial(0) == 1);
  CHECK(cinf::factorial(5) == 120);
  CHECK(cinf::factorial(10) == 3628800);
  CHECK(cinf::binomial(4, 2) == 6);
  CHECK(cinf::binomial(9, 0) == 1);
  CHECK(cinf::binomial(3, 5) == 0);
  CHECK(cinf::binomial(3, -1) == 0);
}

TEST_CASE("arithmetic is exact on random inputs") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a = oracle::random_rational(rng);
    Rational b = oracle::random_rational(rng);
    CHECK((a + b) - b == a);
    CHECK((a * b) + (a * Rational(3)) == a * (b + Rational(3)));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(cinf::bernoulli_number(0) == Rational(1));
  CHECK(cinf::bernoulli_number(1) == Rational(-1, 2));
  CHECK(cinf::bernoulli_number(2) == Rational(1, 6));
  CHECK(cinf::bernoulli_number(3) == Rational(0));
  CHECK(cinf::bernoulli_number(12) == Rational(-691, 2730));
  for (unsigned n = 0; n <= 20; ++n) CHECK(cinf::bernoulli_number(n) == oracle::bernoulli(n));
  for (unsigned n = 3; n <= 15; n += 2) CHECK(cinf::bernoulli_number(n).is_zero());
}

TEST_CASE("bernoulli polynomials") {
  CHECK(cinf::bernoulli_polynomial(0) == UniPoly::constant(1));
  CHECK(cinf::bernoulli_polynomial(1) == UniPoly({Rational(-1, 2), 1}));
  CHECK(cinf::bernoulli_polynomial(2) == UniPoly({Rational(1, 6), -1, 1}));
  for (unsigned n = 0; n <= 16; ++n)
    CHECK(cinf::bernoulli_polynomial(n).evaluate(0) == cinf::bernoulli_number(n));
  // Power sums: sum_{k<m} k^n = (B_{n+1}(m) - B_{n+1}) / (n+1).
  for (unsigned n = 0; n <= 6; ++n)
    for (long m = 1; m <= 6; ++m) {
      Rational sum;
      for (long k = 0; k < m; ++k) {
        Rational p(1);
        for (unsigned e = 0; e < n; ++e) p *= Rational(k);
        sum += p;
      }
      const UniPoly b = cinf::bernoulli_polynomial(n + 1);
      CHECK(sum == (b.evaluate(m) - b.evaluate(0)) / Rational(static_cast<long>(n + 1)));
    }
}

TEST_CASE("exp series ratio") {
  const auto series = cinf::exp_series_ratio(8);
  REQUIRE(series.size() == 9);
  CHECK(series[0].is_zero());
  CHECK(series[1] == UniPoly::monomial(1));
  CHECK(series[2] == UniPoly({0, Rational(-1, 2), Rational(1, 2)}));
  for (unsigned n = 1; n <= 8; ++n) {
    const Rational inv(cinf::BigInt(1), cinf::factorial(n));
    CHECK(series[n] == (cinf::bernoulli_polynomial(n) - UniPoly::constant(cinf::bernoulli_number(n))) * inv);
  }
}

TEST_CASE("unipoly basics") {
  const UniPoly p({1, 0, 3, 0});
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(2) == Rational(13));
  CHECK(p.integrate_unit() == Rational(2));
  CHECK((p - p).is_zero());
  CHECK((UniPoly({1, 1}) * UniPoly({-1, 1})) == UniPoly({-1, 0, 1}));
}
