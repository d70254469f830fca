#pragma once

// Exact Binet machinery at rational parameter points.
//
// With x^3 = -1/z and z = (1-t)^2 (1+t), the characteristic equation
// X^3 - 2x X^2 - 1 = 0 has roots X_i = x w_i where
//
//   w1 = 1 - t,   w2 = (1 + t - W) / 2,   w3 = (1 + t + W) / 2,
//   W^2 = D = (1+t)(5-3t),
//
// and every family member satisfies p_n / x^{n-delta} = A w1^n + B w2^n + C w3^n.
// All quantities live in Q(W) at a fixed rational t.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pell3/exactnum.hpp"
#include "pell3/poly.hpp"

namespace pell3 {

struct SubstitutionPoint {
  Rational t;
  Rational u;  // t + 1
  Rational z;  // (1-t)^2 (1+t) = u (u-2)^2
  Rational d;  // (1+t)(5-3t)
};

// Throws DegenerateParameter for t in {1, -1, -1/3, 5/3}.
SubstitutionPoint substitution_chain(const Rational& t);

struct RootTriple {
  Rational w1;
  QuadExt w2;
  QuadExt w3;
  // Reciprocals v_i = 1 / w_i, the roots of z v^3 - 2v + 1 = 0.
  Rational v1;
  QuadExt v2;
  QuadExt v3;

  QuadExt w1_ext() const { return QuadExt::scalar(w1, w2.d()); }
  QuadExt v1_ext() const { return QuadExt::scalar(v1, v2.d()); }
};

RootTriple roots(const SubstitutionPoint& point);

struct BinetCoefficients {
  Family family = Family::r;
  QuadExt a;  // pairs with w1
  QuadExt b;  // pairs with w2
  QuadExt c;  // pairs with w3
};

// Initial values p_k / x^{k-delta} for k = 0, 1, 2 under x^{-3} = -z.
std::array<Rational, 3> normalized_initial_values(Family family, const Rational& z);

// Solves the Vandermonde system sum_i coeff_i w_i^k = normalized p_k,
// k = 0, 1, 2, by Gaussian elimination in Q(W).
BinetCoefficients solve_coefficients(Family family, const SubstitutionPoint& point);

// Closed-form coefficients:
//   r: A = -1/(1+3t), B,C = 1/(2(1+3t)) -/+ (3/2) W / ((5-3t)(1+3t))
//   s: A = -2t/((1+3t)(t-1)),
//      B,C = t/((1+3t)(t-1)) +/- W (3t^2-3t-2)/((t^2-1)(3t+1)(3t-5))
//   sigma: A = B = C = 1
// The s-family forms differ from the literal printed display in two places:
// the second term of B, C carries a factor W, and A has the opposite sign
// (A + B + C = s_0 = 0 forces it). See literal_paper_coefficients.
BinetCoefficients paper_coefficients(Family family, const SubstitutionPoint& point);

// The coefficient displays read verbatim, without the s-family corrections.
// Identical to paper_coefficients for r and sigma.
BinetCoefficients literal_paper_coefficients(Family family, const SubstitutionPoint& point);

// A w1^n + B w2^n + C w3^n, unreduced.
QuadExt binet_combination(const BinetCoefficients& coeffs, const RootTriple& roots,
                          std::uint64_t n);

// Rational part of the combination for p_n; throws IdentityViolation when the
// W-part is nonzero. Equals compact_eval_in_z(p_n, point.z).
Rational binet_eval(Family family, long n, const SubstitutionPoint& point);

struct XiCheck {
  Rational scalar;      // rational part of (5-3t-3W)(1+t-W)^n + (5-3t+3W)(1+t+W)^n
  Rational wpart;       // W-part of the same; must be 0
  Rational double_sum;  // (5-3t)[2 sum C(n,2k)(5-3t)^k(1+t)^{n-k} + 6 sum C(n,2k+1)(5-3t)^k(1+t)^{n-k}]
  bool ok() const { return sgn(wpart) == 0 && scalar == double_sum; }
};

XiCheck xi_check(long n, const SubstitutionPoint& point);

// p_n = w2^n + w3^n and q_n = (w2^n - w3^n)/(w2 - w3) as integer polynomials
// in t, for n = 0..max_n (q_0 = 0).
struct PowerSums {
  std::vector<DensePoly> p;
  std::vector<DensePoly> q;
};

PowerSums power_sums(long max_n);

struct Residual {
  std::string name;
  QuadExt value;
};

struct RootCheckReport {
  std::vector<Residual> residuals;
  bool ok() const;
  std::vector<std::string> failing() const;
};

// Residuals of w^3 - 2w^2 + z for each w_i, z v^3 - 2v + 1 for each v_i,
// v_i w_i - 1, v2 + v3 - 1/(t-1), v2 v3 - 1/(t^2-1), w2 + w3 - (1+t),
// w2 w3 - (t^2-1) and w1 w2 w3 + z. All must vanish.
RootCheckReport char_root_check(const SubstitutionPoint& point);

// `count` distinct rationals p/q in (-1, 1) (q <= 12 while count <= 80), avoiding excluded
// values, drawn from a seeded mt19937_64. Identical on every platform.
std::vector<Rational> sample_t_values(std::size_t count, std::uint64_t seed);

}  // namespace pell3
