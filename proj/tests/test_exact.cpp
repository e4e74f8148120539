#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>

#include "fewbody/exact.hpp"

using namespace fewbody;

TEST_CASE("rationals normalize sign and common factors") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-7, 3).str() == "-7/3");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow is detected rather than wrapped") {
  const Rational big(INT64_MAX / 2 + 1);
  CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
  CHECK_THROWS_AS(Rational(INT64_MIN), std::overflow_error);
}

TEST_CASE("square roots reduce to square-free radicands") {
  CHECK(Surd::sqrt(Rational(12)) == Surd(2) * Surd::sqrt(Rational(3)));
  CHECK(Surd::sqrt(Rational(3, 4)) == Surd::sqrt(Rational(3)) / Rational(2));
  CHECK(Surd::sqrt(Rational(1, 2)) == Surd::sqrt(Rational(2)) / Rational(2));
  CHECK(Surd::sqrt(Rational(9, 4)) == Surd(Rational(3, 2)));
  CHECK(Surd::sqrt(Rational(9, 4)).is_rational());
  CHECK(Surd::sqrt(Rational(0)).is_zero());
  CHECK_THROWS_AS(Surd::sqrt(Rational(-1)), std::domain_error);
}

TEST_CASE("surd products combine radicands") {
  const Surd r2 = Surd::sqrt(Rational(2));
  const Surd r3 = Surd::sqrt(Rational(3));
  CHECK(r2 * r2 == Surd(2));
  CHECK(r2 * r3 == Surd::sqrt(Rational(6)));
  CHECK((r2 + r3) * (r2 - r3) == Surd(-1));
  CHECK((r2 - r2).is_zero());
  CHECK(!(r2 + r3).is_rational());
  CHECK((Surd(1) + r3).rational_part() == Rational(1));
}

TEST_CASE("surds agree with floating point") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> n(1, 60), d(1, 30);
  for (int k = 0; k < 200; ++k) {
    const Rational a(n(rng), d(rng)), b(n(rng), d(rng));
    const Surd s = Surd::sqrt(a) * Surd(Rational(d(rng), n(rng))) + Surd::sqrt(b);
    const Surd t = Surd::sqrt(b) - Surd::sqrt(a);
    const double expected = s.to_double() * t.to_double();
    CHECK((s * t).to_double() == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == 2432902008176640000LL);
  CHECK_THROWS(factorial(21));
  CHECK_THROWS(factorial(-1));
}

TEST_CASE("negligibility follows the scalar kind") {
  CHECK(is_negligible(Surd()));
  CHECK(!is_negligible(Surd(Rational(1, 1000000))));
  CHECK(is_negligible(std::complex<double>(1e-15, 0)));
  CHECK(!is_negligible(std::complex<double>(1e-13, 0)));
}
