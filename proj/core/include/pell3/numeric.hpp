#pragma once

// Floating-point Binet formula, computed the way a downstream user would:
// numeric roots of X^3 - 2x X^2 - 1 and a 3x3 solve against the initial
// values, with no use of the t-parametrization.

#include <array>
#include <complex>
#include <vector>

#include "pell3/exactnum.hpp"
#include "pell3/poly.hpp"

namespace pell3 {

// Roots of X^3 - 2x X^2 - 1, Newton-polished.
std::array<std::complex<double>, 3> characteristic_roots(double x);

struct NumericRow {
  long n = 0;
  Rational exact;       // p_n(x) from the recurrence
  double binet = 0.0;   // real part of sum alpha_i X_i^n
  double error = 0.0;   // relative error; absolute when exact == 0
};

// Rows n = 0..n_max. Throws DomainError if x == 0.
std::vector<NumericRow> numeric_binet_demo(Family family, long n_max, const Rational& x);

}  // namespace pell3
