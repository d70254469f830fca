#include "pell3/binet.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pell3/errors.hpp"
#include "pell3/pell.hpp"

namespace pell3 {

SubstitutionPoint substitution_chain(const Rational& t) {
  if (t == 1) throw DegenerateParameter("t = 1: factor (1-t)^2 vanishes (double root, z = 0)");
  if (t == -1) throw DegenerateParameter("t = -1: factor (1+t) vanishes (z = 0, W = 0)");
  if (t == make_rational(-1, 3)) {
    throw DegenerateParameter("t = -1/3: factor (1+3t) vanishes (w1 = w3)");
  }
  if (t == make_rational(5, 3)) {
    throw DegenerateParameter("t = 5/3: factor (5-3t) vanishes (W = 0, w2 = w3)");
  }
  SubstitutionPoint p;
  p.t = t;
  p.u = t + 1;
  const Rational one_minus_t = 1 - t;
  p.z = one_minus_t * one_minus_t * (1 + t);
  p.d = (1 + t) * (5 - 3 * t);
  return p;
}

RootTriple roots(const SubstitutionPoint& point) {
  const Rational& d = point.d;
  RootTriple r;
  r.w1 = 1 - point.t;
  const Rational half_sum = (1 + point.t) / 2;
  const Rational half = make_rational(1, 2);
  r.w2 = QuadExt(half_sum, -half, d);
  r.w3 = QuadExt(half_sum, half, d);
  r.v1 = 1 / r.w1;
  r.v2 = r.w2.inverse();
  r.v3 = r.w3.inverse();
  return r;
}

std::array<Rational, 3> normalized_initial_values(Family family, const Rational& z) {
  const auto init = initial_values(family);
  return {compact_eval_in_z(init[0], z), compact_eval_in_z(init[1], z),
          compact_eval_in_z(init[2], z)};
}

namespace {

using Matrix3 = std::array<std::array<QuadExt, 3>, 3>;

// Gaussian elimination in Q(W). Pivots are chosen among units (nonzero norm)
// so the solve also works when D happens to be a rational square.
std::array<QuadExt, 3> solve3(Matrix3 m, std::array<QuadExt, 3> rhs) {
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    while (pivot < 3 && sgn(m[pivot][col].norm()) == 0) ++pivot;
    if (pivot == 3) throw IdentityViolation("singular Vandermonde system in Binet solve");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const QuadExt inv = m[col][col].inverse();
    for (std::size_t row = col + 1; row < 3; ++row) {
      if (m[row][col].is_zero()) continue;
      const QuadExt factor = m[row][col] * inv;
      for (std::size_t k = col; k < 3; ++k) m[row][k] -= factor * m[col][k];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::array<QuadExt, 3> x;
  for (std::size_t i = 3; i-- > 0;) {
    QuadExt acc = rhs[i];
    for (std::size_t k = i + 1; k < 3; ++k) acc -= m[i][k] * x[k];
    x[i] = acc / m[i][i];
  }
  return x;
}

}  // namespace

BinetCoefficients solve_coefficients(Family family, const SubstitutionPoint& point) {
  const RootTriple r = roots(point);
  const Rational& d = point.d;
  const std::array<QuadExt, 3> w{r.w1_ext(), r.w2, r.w3};
  Matrix3 m;
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < 3; ++i) m[k][i] = pow(w[i], k);
  }
  const auto y = normalized_initial_values(family, point.z);
  const auto x = solve3(m, {QuadExt::scalar(y[0], d), QuadExt::scalar(y[1], d),
                            QuadExt::scalar(y[2], d)});
  return {family, x[0], x[1], x[2]};
}

namespace {

BinetCoefficients s_coefficients(const SubstitutionPoint& point, bool literal) {
  const Rational& t = point.t;
  const Rational& d = point.d;
  const Rational one_3t = 1 + 3 * t;
  const Rational a = 2 * t / (one_3t * (t - 1));
  const Rational scalar = t / (one_3t * (t - 1));
  const Rational second = (3 * t * t - 3 * t - 2) / ((t * t - 1) * (3 * t + 1) * (3 * t - 5));
  if (literal) {
    return {Family::s, QuadExt::scalar(a, d), QuadExt::scalar(scalar + second, d),
            QuadExt::scalar(scalar - second, d)};
  }
  return {Family::s, QuadExt::scalar(-a, d), QuadExt(scalar, second, d), QuadExt(scalar, -second, d)};
}

}  // namespace

BinetCoefficients paper_coefficients(Family family, const SubstitutionPoint& point) {
  const Rational& t = point.t;
  const Rational& d = point.d;
  switch (family) {
    case Family::r: {
      const Rational one_3t = 1 + 3 * t;
      const Rational a = -1 / one_3t;
      const Rational scalar = 1 / (2 * one_3t);
      const Rational wcoef = make_rational(3, 2) / ((5 - 3 * t) * one_3t);
      return {family, QuadExt::scalar(a, d), QuadExt(scalar, -wcoef, d), QuadExt(scalar, wcoef, d)};
    }
    case Family::s:
      return s_coefficients(point, false);
    case Family::sigma: {
      const QuadExt one = QuadExt::scalar(1, d);
      return {family, one, one, one};
    }
  }
  throw DomainError("unknown family");
}

BinetCoefficients literal_paper_coefficients(Family family, const SubstitutionPoint& point) {
  if (family == Family::s) return s_coefficients(point, true);
  return paper_coefficients(family, point);
}

QuadExt binet_combination(const BinetCoefficients& coeffs, const RootTriple& roots,
                          std::uint64_t n) {
  QuadExt out = coeffs.a * pow(roots.w1_ext(), n);
  out += coeffs.b * pow(roots.w2, n);
  out += coeffs.c * pow(roots.w3, n);
  return out;
}

Rational binet_eval(Family family, long n, const SubstitutionPoint& point) {
  if (n < 0) throw DomainError("binet_eval: n must be nonnegative");
  const BinetCoefficients coeffs = solve_coefficients(family, point);
  const QuadExt value = binet_combination(coeffs, roots(point), static_cast<std::uint64_t>(n));
  if (!value.is_rational()) {
    throw IdentityViolation("Binet combination for " + std::string(family_name(family)) + "_" +
                            std::to_string(n) + " at t = " + point.t.get_str() +
                            " has W-part " + value.b().get_str());
  }
  return value.a();
}

XiCheck xi_check(long n, const SubstitutionPoint& point) {
  if (n < 0) throw DomainError("xi_check: n must be nonnegative");
  const Rational& t = point.t;
  const Rational& d = point.d;
  const Rational five_3t = 5 - 3 * t;
  const Rational one_t = 1 + t;
  const auto un = static_cast<std::uint64_t>(n);

  const QuadExt minus = QuadExt(five_3t, -3, d) * pow(QuadExt(one_t, -1, d), un);
  const QuadExt plus = QuadExt(five_3t, 3, d) * pow(QuadExt(one_t, 1, d), un);
  const QuadExt lhs = minus + plus;

  Rational even = 0;
  Rational odd = 0;
  for (long k = 0; 2 * k <= n; ++k) {
    const Rational common = pow(five_3t, k) * pow(one_t, n - k);
    even += Rational(gen_binomial(n, 2 * k)) * common;
    if (2 * k + 1 <= n) odd += Rational(gen_binomial(n, 2 * k + 1)) * common;
  }
  return {lhs.a(), lhs.b(), five_3t * (2 * even + 6 * odd)};
}

PowerSums power_sums(long max_n) {
  if (max_n < 0) throw DomainError("power_sums: max_n must be nonnegative");
  PowerSums out;
  const DensePoly e1({1, 1});       // 1 + t
  const DensePoly e2({-1, 0, 1});   // t^2 - 1
  out.p.push_back(DensePoly({2}));
  out.q.push_back(DensePoly());
  if (max_n >= 1) {
    out.p.push_back(e1);
    out.q.push_back(DensePoly({1}));
  }
  for (long n = 2; n <= max_n; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out.p.push_back(e1 * out.p[i - 1] - e2 * out.p[i - 2]);
    out.q.push_back(e1 * out.q[i - 1] - e2 * out.q[i - 2]);
  }
  return out;
}

bool RootCheckReport::ok() const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [](const Residual& r) { return r.value.is_zero(); });
}

std::vector<std::string> RootCheckReport::failing() const {
  std::vector<std::string> out;
  for (const auto& r : residuals) {
    if (!r.value.is_zero()) out.push_back(r.name);
  }
  return out;
}

RootCheckReport char_root_check(const SubstitutionPoint& point) {
  const RootTriple r = roots(point);
  const Rational& d = point.d;
  const Rational& t = point.t;
  const QuadExt z = QuadExt::scalar(point.z, d);
  const QuadExt one = QuadExt::scalar(1, d);

  auto w_poly = [&](const QuadExt& w) { return w * w * w - 2 * (w * w) + z; };
  auto v_poly = [&](const QuadExt& v) { return z * (v * v * v) - 2 * v + one; };

  const QuadExt w1 = r.w1_ext();
  const QuadExt v1 = r.v1_ext();

  RootCheckReport report;
  report.residuals = {
      {"w1^3-2w1^2+z", w_poly(w1)},
      {"w2^3-2w2^2+z", w_poly(r.w2)},
      {"w3^3-2w3^2+z", w_poly(r.w3)},
      {"z*v1^3-2v1+1", v_poly(v1)},
      {"z*v2^3-2v2+1", v_poly(r.v2)},
      {"z*v3^3-2v3+1", v_poly(r.v3)},
      {"v1*w1-1", v1 * w1 - one},
      {"v2*w2-1", r.v2 * r.w2 - one},
      {"v3*w3-1", r.v3 * r.w3 - one},
      {"v2+v3-1/(t-1)", r.v2 + r.v3 - QuadExt::scalar(1 / (t - 1), d)},
      {"v2*v3-1/(t^2-1)", r.v2 * r.v3 - QuadExt::scalar(1 / (t * t - 1), d)},
      {"w2+w3-(1+t)", r.w2 + r.w3 - QuadExt::scalar(1 + t, d)},
      {"w2*w3-(t^2-1)", r.w2 * r.w3 - QuadExt::scalar(t * t - 1, d)},
      {"w1*w2*w3+z", w1 * r.w2 * r.w3 + z},
  };
  return report;
}

std::vector<Rational> sample_t_values(std::size_t count, std::uint64_t seed) {
  // Raw engine output keeps the sequence independent of the standard
  // library's distribution implementations.
  std::mt19937_64 engine(seed);
  const std::uint64_t max_den =
      count <= 80 ? 12 : 12 + static_cast<std::uint64_t>(4 * std::sqrt(static_cast<double>(count)));
  std::vector<Rational> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::uint64_t den = 2 + engine() % (max_den - 1);
    const std::uint64_t span = 2 * den - 1;  // numerators -(den-1) .. den-1
    const long num = static_cast<long>(engine() % span) - static_cast<long>(den - 1);
    const Rational t = make_rational(num, static_cast<long>(den));
    if (t == make_rational(-1, 3)) continue;
    if (std::find(out.begin(), out.end(), t) != out.end()) continue;
    out.push_back(t);
  }
  return out;
}

}  // namespace pell3
