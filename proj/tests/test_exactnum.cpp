#include <doctest.h>

#include "oracles.hpp"
#include "pell3/errors.hpp"
#include "pell3/exactnum.hpp"

using namespace pell3;

TEST_CASE("gen_binomial examples") {
  CHECK(gen_binomial(5, 2) == 10);
  CHECK(gen_binomial(-1, 3) == -1);
  CHECK(gen_binomial(-2, 3) == -4);
  CHECK(gen_binomial(0, 0) == 1);
  CHECK(gen_binomial(3, 5) == 0);
  CHECK(gen_binomial(-7, 0) == 1);
  CHECK_THROWS_AS(gen_binomial(4, -1), DomainError);
}

TEST_CASE("gen_binomial agrees with the falling-factorial product") {
  for (long m = -30; m <= 30; ++m) {
    for (long k = 0; k <= 12; ++k) {
      INFO("m=" << m << " k=" << k);
      CHECK(Rational(gen_binomial(m, k)) == oracle::falling_binomial(m, k));
    }
  }
}

TEST_CASE("upper negation bridges C(3l-n, l) and C(n-2l-1, l)") {
  for (long l = 0; l <= 40; ++l) {
    for (long n = 0; n <= 30; ++n) {
      const BigInteger sign = l % 2 == 0 ? 1 : -1;
      INFO("l=" << l << " n=" << n);
      CHECK(gen_binomial(3 * l - n, l) == sign * gen_binomial(n - 2 * l - 1, l));
    }
  }
}

TEST_CASE("rationals stay canonical") {
  const Rational q = make_rational(6, -8);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 4);
  CHECK(to_fraction_string(make_rational(0, 5)) == "0/1");
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(make_rational(2, 4) + make_rational(1, 4)) == "3/4");
  CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
}

TEST_CASE("pow2 and rational powers") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(10) == 1024);
  CHECK(pow2(-3) == make_rational(1, 8));
  CHECK(pow(make_rational(-2, 3), 3) == make_rational(-8, 27));
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(pow(Rational(0), 0) == 1);
  CHECK_THROWS_AS(pow(Rational(0), -1), DivisionByZero);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/4") == make_rational(3, 4));
  CHECK(parse_rational("-6/8") == make_rational(-3, 4));
  CHECK(parse_rational("5") == 5);
  CHECK(parse_rational("-0.125") == make_rational(-1, 8));
  CHECK(parse_rational(".5") == make_rational(1, 2));
  CHECK(parse_rational("2.") == 2);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("3/-4"), std::invalid_argument);
}

TEST_CASE("to_decimal rounds half away from zero") {
  CHECK(to_decimal(make_rational(2, 3)) == "0.666666666667");
  CHECK(to_decimal(make_rational(32, 27), 6) == "1.185185");
  CHECK(to_decimal(make_rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(make_rational(1, 8), 2) == "0.13");
  CHECK(to_decimal(Rational(0), 3) == "0.000");
  CHECK(to_decimal(make_rational(-1, 1000), 2) == "0.00");
  CHECK(to_decimal(Rational(42), 0) == "42");
}

TEST_CASE("QuadExt examples") {
  const Rational five = 5;
  const QuadExt lhs(1, 1, five);
  const QuadExt rhs(1, -1, five);
  CHECK(lhs * rhs == QuadExt(-4, 0, five));
  CHECK(QuadExt(make_rational(2, 3), 7, five).conjugate() == QuadExt(make_rational(2, 3), -7, five));
  CHECK(pow(QuadExt::sqrt_d(five), 2) == QuadExt::scalar(5, five));
  CHECK(pow(lhs, 0) == QuadExt::scalar(1, five));
  CHECK(lhs.norm() == -4);
  CHECK((lhs / rhs) * rhs == lhs);
  CHECK(lhs.to_double() == doctest::Approx(1 + std::sqrt(5.0)));
}

TEST_CASE("QuadExt error paths") {
  const QuadExt a(1, 1, 5);
  const QuadExt b(1, 1, 7);
  CHECK_THROWS_AS(a + b, IncompatibleExtension);
  CHECK_THROWS_AS(a * b, IncompatibleExtension);
  CHECK_THROWS_AS((void)(a == b), IncompatibleExtension);
  CHECK_THROWS_AS(QuadExt::scalar(0, 5).inverse(), DivisionByZero);
  CHECK_THROWS_AS(a / QuadExt::scalar(0, 5), DivisionByZero);
  CHECK_THROWS_AS(a / Rational(0), DivisionByZero);
  // W^2 = 4 splits: 2 - W is a nonzero zero divisor.
  CHECK_THROWS_AS(QuadExt(2, -1, 4).inverse(), DivisionByZero);
}

TEST_CASE("QuadExt field properties on random elements") {
  oracle::RationalGen gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational d = gen.next_nonzero(12, 5);
    const QuadExt e(gen.next(), gen.next(), d);
    const QuadExt f(gen.next(), gen.next(), d);
    CHECK((e * f).conjugate() == e.conjugate() * f.conjugate());
    CHECK((e + f).conjugate() == e.conjugate() + f.conjugate());
    CHECK(e * f == f * e);
    CHECK((e * e.conjugate()).is_rational());
    if (sgn(e.norm()) != 0) CHECK(e * e.inverse() == QuadExt::scalar(1, d));

    const auto m = gen.below(9);
    const auto n = gen.below(9);
    CHECK(pow(e, m + n) == pow(e, m) * pow(e, n));
  }
}
