#include <doctest.h>

#include "oracles.hpp"
#include "pell3/errors.hpp"
#include "pell3/lagrange.hpp"
#include "pell3/pell.hpp"

using namespace pell3;

TEST_CASE("u coefficients") {
  CHECK(u_coefficient(0) == 0);
  CHECK(u_coefficient(1) == make_rational(1, 4));
  CHECK(u_coefficient(2) == make_rational(1, 16));
  CHECK(u_coefficient(3) == make_rational(7, 256));
  CHECK(u_coefficient(4) == make_rational(15, 1024));
  CHECK(u_coefficient(5) == make_rational(143, 16384));
}

TEST_CASE("u_series matches the fixed-point iteration") {
  const RatSeries u = u_series(30);
  CHECK(u.order() == 31);
  CHECK(u.coeffs() == oracle::u_fixed_point(31));
  CHECK_THROWS_AS(u_series(0), DomainError);
}

TEST_CASE("inversion by composition") {
  for (long order : {1L, 8L, 64L}) {
    const InversionCheck c = verify_inversion(order);
    CHECK(c.order == order);
    CHECK(c.ok());
  }
  CHECK_THROWS_AS(verify_inversion(0), DomainError);
}

TEST_CASE("z_of_u") {
  CHECK(z_of_u(make_rational(2, 3)) == make_rational(32, 27));
  CHECK(z_of_u(Rational(0)) == 0);
  CHECK(z_of_u(Rational(2)) == 0);
  CHECK(z_of_u(make_rational(3, 2)) == make_rational(3, 8));
}

TEST_CASE("first-term coefficients") {
  CHECK(first_term_coefficient(0, 0) == make_rational(1, 2));
  CHECK(first_term_coefficient(1, 0) == 1);
  CHECK(first_term_coefficient(5, 1) == -4);
  CHECK(first_term_coefficient(4, 0) == 8);
  CHECK(first_term_coefficient(4, 1) == -1);
  CHECK(first_term_coefficient(4, 2) == make_rational(1, 8));
  CHECK(first_term_coefficient(4, 3) == make_rational(5, 32));
}

TEST_CASE("first-term series agrees with a naive expansion") {
  const std::size_t len = 16;
  const oracle::Series u = oracle::u_fixed_point(len);
  for (long n = 0; n <= 12; ++n) {
    // -(2-u)^n / (3u-2) with plain products.
    oracle::Series two_minus_u(len);
    for (std::size_t i = 0; i < len; ++i) two_minus_u[i] = -u[i];
    two_minus_u[0] += 2;
    oracle::Series num(len);
    num[0] = 1;
    for (long k = 0; k < n; ++k) num = oracle::naive_mul(num, two_minus_u);
    oracle::Series den(len);
    for (std::size_t i = 0; i < len; ++i) den[i] = 3 * u[i];
    den[0] -= 2;
    oracle::Series expected = oracle::naive_mul(num, oracle::naive_inverse(den));
    for (auto& c : expected) c = -c;

    const RatSeries got = first_term_series(n, static_cast<long>(len));
    CHECK(got.coeffs() == expected);
  }
}

TEST_CASE("truncation bridge") {
  const BridgeCheck b4 = truncation_bridge(4);
  CHECK(b4.polynomial == std::vector<BigInteger>{8, 1});
  CHECK(b4.series_prefix == b4.polynomial);
  const BridgeCheck b18 = truncation_bridge(18);
  CHECK(b18.ok());
  CHECK(b18.polynomial.size() == 6);
  CHECK(truncation_bridge(1).ok());
  for (long n = 1; n <= 100; ++n) CHECK(truncation_bridge(n).ok());
  CHECK_THROWS_AS(truncation_bridge(0), DomainError);
}

TEST_CASE("ratio test") {
  CHECK(radius_estimate(10) == make_rational(273, 380));
  CHECK(radius_estimate(59) == make_rational(30275, 36816));
  CHECK(radius_estimate(60) == make_rational(979, 1190));
  CHECK_THROWS_AS(radius_estimate(9), DomainError);
  // Monotone increase toward 27/32.
  for (long n = 11; n <= 80; ++n) {
    CHECK(radius_estimate(n) > radius_estimate(n - 1));
    CHECK(radius_estimate(n) < make_rational(27, 32));
  }
}

TEST_CASE("z_of_u samples") {
  const auto rows = z_of_u_samples(Rational(0), Rational(2), 4);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].first == make_rational(2, 3));
  CHECK(rows[1].second == make_rational(32, 27));
  CHECK(rows.back().first == 2);
  CHECK(rows.back().second == 0);
  CHECK_THROWS(z_of_u_samples(Rational(0), Rational(2), 1));
  CHECK_THROWS(z_of_u_samples(Rational(2), Rational(0), 4));
}
