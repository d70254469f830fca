#include "pell3/lagrange.hpp"

#include "pell3/errors.hpp"
#include "pell3/pell.hpp"

namespace pell3 {

Rational u_coefficient(long n) {
  if (n <= 0) return 0;
  Rational c(gen_binomial(3 * n - 2, n - 1));
  c /= n;
  c *= pow2(-(3 * n - 1));
  return c;
}

RatSeries u_series(long order) {
  if (order < 1) throw DomainError("u_series: order must be >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (long n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = u_coefficient(n);
  return RatSeries(std::move(c));
}

Rational z_of_u(const Rational& u) {
  const Rational shifted = u - 2;
  return u * shifted * shifted;
}

InversionCheck verify_inversion(long order) {
  if (order < 1) throw DomainError("verify_inversion: order must be >= 1");
  const RatSeries u = u_series(order);
  const std::size_t n = u.order();
  // u^3 - 4u^2 + 4u as an outer series in u.
  std::vector<Rational> c(n);
  if (n > 1) c[1] = 4;
  if (n > 2) c[2] = -4;
  if (n > 3) c[3] = 1;
  const RatSeries composed = ser_compose(RatSeries(std::move(c)), u);
  const RatSeries z = RatSeries::variable(n);

  InversionCheck out;
  out.order = order;
  for (std::size_t i = 0; i < n; ++i) {
    if (composed[i] != z[i]) {
      out.first_bad_index = static_cast<long>(i);
      break;
    }
  }
  return out;
}

Rational first_term_coefficient(long n, long l) {
  return Rational(gen_binomial(3 * l - n, l)) * pow2(n - 3 * l - 1);
}

RatSeries first_term_series(long n, long order) {
  if (n < 0) throw DomainError("first_term_series: n must be nonnegative");
  if (order < 1) throw DomainError("first_term_series: order must be >= 1");
  const auto len = static_cast<std::size_t>(order);
  // u(z) truncated to `order` coefficients (z^0 .. z^{order-1}).
  const RatSeries u = u_series(order).truncated(len);
  const RatSeries two_minus_u = -u + Rational(2);
  const RatSeries denom = Rational(3) * u + Rational(-2);
  const RatSeries series = -(ser_pow(two_minus_u, static_cast<unsigned long>(n)) *
                             ser_reciprocal(denom));
  for (long l = 0; l < order; ++l) {
    const Rational expected = first_term_coefficient(n, l);
    if (series[static_cast<std::size_t>(l)] != expected) {
      throw IdentityViolation("first-term series n=" + std::to_string(n) + " l=" +
                              std::to_string(l) + ": expansion gives " +
                              series[static_cast<std::size_t>(l)].get_str() + ", formula gives " +
                              expected.get_str());
    }
  }
  return series;
}

BridgeCheck truncation_bridge(long n) {
  if (n < 1) throw DomainError("truncation_bridge: n must be >= 1");
  const long prefix = (n - 1) / 3 + 1;
  const RatSeries series = first_term_series(n, prefix);
  BridgeCheck out;
  out.n = n;
  for (long l = 0; l < prefix; ++l) {
    Rational c = series[static_cast<std::size_t>(l)];
    if (l % 2 != 0) c = -c;
    if (c.get_den() != 1) {
      throw IdentityViolation("first-term coefficient n=" + std::to_string(n) + " l=" +
                              std::to_string(l) + " is not an integer: " + c.get_str());
    }
    out.series_prefix.push_back(c.get_num());
  }
  out.polynomial = recurrence_gen(Family::r, n).coeffs;
  return out;
}

Rational radius_estimate(long order) {
  if (order < 10) throw DomainError("radius_estimate: order must be >= 10");
  return u_coefficient(order) / u_coefficient(order - 1);
}

std::vector<std::pair<Rational, Rational>> z_of_u_samples(const Rational& from,
                                                          const Rational& to, long steps) {
  if (steps < 2) throw DomainError("z_of_u_samples: steps must be >= 2");
  if (!(from < to)) throw DomainError("z_of_u_samples: need from < to");
  const Rational h = (to - from) / (steps - 1);
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (long i = 0; i < steps; ++i) {
    const Rational u = i + 1 == steps ? to : Rational(from + i * h);
    out.emplace_back(u, z_of_u(u));
  }
  return out;
}

}  // namespace pell3
