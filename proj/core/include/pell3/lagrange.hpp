#pragma once

// Series facts around the inversion of z = u (u-2)^2 near u = 0.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pell3/series.hpp"

namespace pell3 {

// u_n = (1/n) C(3n-2, n-1) / 2^{3n-1}, n >= 1; u_0 = 0.
Rational u_coefficient(long n);

// u(z) through z^order (truncation order + 1). Requires order >= 1.
RatSeries u_series(long order);

// z = u (u-2)^2 as a function of u.
Rational z_of_u(const Rational& u);

struct InversionCheck {
  long order = 0;
  // First index where u(u-2)^2 composed with u_series differs from z.
  std::optional<long> first_bad_index;
  bool ok() const { return !first_bad_index.has_value(); }
};

// Substitutes u_series(order) into u^3 - 4u^2 + 4u and compares with the
// identity series z through z^order. Requires order >= 1.
InversionCheck verify_inversion(long order);

// 2^{n-3l-1} C(3l-n, l).
Rational first_term_coefficient(long n, long l);

// -(2-u)^n / (3u-2) expanded in z by substituting u = u(z), truncation
// order `order`. Throws IdentityViolation if any coefficient disagrees with
// first_term_coefficient.
RatSeries first_term_series(long n, long order);

struct BridgeCheck {
  long n = 0;
  std::vector<BigInteger> series_prefix;  // (-1)^l [z^l] first-term series
  std::vector<BigInteger> polynomial;     // compact coefficients of r_n
  bool ok() const { return series_prefix == polynomial; }
};

// Sign-mapped prefix l <= (n-1)/3 of the first-term series against r_n.
// Requires n >= 1.
BridgeCheck truncation_bridge(long n);

// u_order / u_{order-1} for order >= 10; tends to 27/32, the reciprocal of
// the radius of convergence 32/27.
Rational radius_estimate(long order);

// Evenly spaced exact samples (u, u(u-2)^2) on [from, to]; steps >= 2, from < to.
std::vector<std::pair<Rational, Rational>> z_of_u_samples(const Rational& from,
                                                          const Rational& to, long steps);

}  // namespace pell3
