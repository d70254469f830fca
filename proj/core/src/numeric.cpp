#include "pell3/numeric.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "pell3/errors.hpp"
#include "pell3/pell.hpp"

namespace pell3 {

std::array<std::complex<double>, 3> characteristic_roots(double x) {
  using C = std::complex<double>;
  // Companion matrix of X^3 + c2 X^2 + c1 X + c0 with c2 = -2x, c1 = 0, c0 = -1.
  Eigen::Matrix3d companion;
  companion << 0, 0, 1,
               1, 0, 0,
               0, 1, 2 * x;
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(companion.cast<C>());
  const auto& ev = solver.eigenvalues();
  std::array<C, 3> out{ev(0), ev(1), ev(2)};
  for (auto& root : out) {
    for (int i = 0; i < 3; ++i) {
      const C f = root * root * (root - 2 * x) - 1.0;
      const C df = root * (3.0 * root - 4 * x);
      if (std::abs(df) == 0.0) break;
      root -= f / df;
    }
  }
  return out;
}

std::vector<NumericRow> numeric_binet_demo(Family family, long n_max, const Rational& x) {
  using C = std::complex<double>;
  if (sgn(x) == 0) throw DomainError("numeric demo needs x != 0");
  if (n_max < 0) throw DomainError("numeric demo needs n_max >= 0");

  const double xd = x.get_d();
  const auto roots = characteristic_roots(xd);
  const auto init = initial_values(family);

  Eigen::Matrix3cd vander;
  Eigen::Vector3cd rhs;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) vander(k, i) = std::pow(roots[static_cast<std::size_t>(i)], k);
    rhs(k) = C(eval_rational(to_dense(init[static_cast<std::size_t>(k)]), x).get_d(), 0.0);
  }
  const Eigen::Vector3cd alpha = vander.partialPivLu().solve(rhs);

  std::vector<NumericRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  const auto exact_rows = coefficient_triangle(family, n_max);
  std::array<C, 3> powers{C(1), C(1), C(1)};
  for (long n = 0; n <= n_max; ++n) {
    NumericRow row;
    row.n = n;
    row.exact = eval_rational(to_dense(exact_rows[static_cast<std::size_t>(n)]), x);
    C value = 0;
    for (int i = 0; i < 3; ++i) value += alpha(i) * powers[static_cast<std::size_t>(i)];
    row.binet = value.real();
    const double exact = row.exact.get_d();
    row.error = exact == 0.0 ? std::abs(row.binet) : std::abs(row.binet - exact) / std::abs(exact);
    rows.push_back(std::move(row));
    for (std::size_t i = 0; i < 3; ++i) powers[i] *= roots[i];
  }
  return rows;
}

}  // namespace pell3
