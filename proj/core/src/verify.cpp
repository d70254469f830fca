#include "pell3/verify.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>

#include "pell3/binet.hpp"
#include "pell3/errors.hpp"
#include "pell3/lagrange.hpp"
#include "pell3/pell.hpp"

namespace pell3 {

namespace {

constexpr Family kFamilies[] = {Family::r, Family::s, Family::sigma};

long pick_max_n(const VerifyOptions& opts, long fallback) {
  return opts.max_n < 0 ? fallback : opts.max_n;
}

// Runs fn(i) for i in [0, count) over a few workers; results keep index order.
template <class F>
auto parallel_map(std::size_t count, unsigned workers, F fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> out(count);
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::future<void>> tasks;
  tasks.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
    }));
  }
  for (auto& task : tasks) task.get();
  return out;
}

struct PointResult {
  std::vector<Failure> failures;
  long s_literal_a_mismatches = 0;
  long s_literal_bc_mismatches = 0;
  long s_corrected_matches = 0;
};

Failure fail(std::string suite, const Rational* t, std::optional<long> n, std::string message) {
  return Failure{std::move(suite), t ? std::optional<std::string>(to_fraction_string(*t))
                                     : std::nullopt,
                 n, std::move(message)};
}

std::string family_label(Family f) { return std::string(family_name(f)); }

// ---------------------------------------------------------------------------

PointResult binet_at_point(const Rational& t, long max_n,
                           const std::vector<std::vector<CompactPell>>& rows,
                           const PowerSums& sums) {
  const std::string suite = "binet";
  PointResult res;
  SubstitutionPoint point;
  try {
    point = substitution_chain(t);
  } catch (const std::exception& e) {
    res.failures.push_back(fail(suite, &t, std::nullopt, e.what()));
    return res;
  }
  const RootTriple rts = roots(point);
  const Rational& d = point.d;

  for (std::size_t fi = 0; fi < std::size(kFamilies); ++fi) {
    const Family family = kFamilies[fi];
    const std::string label = family_label(family);
    try {
      const BinetCoefficients solved = solve_coefficients(family, point);
      const BinetCoefficients printed = paper_coefficients(family, point);
      if (!(solved.a == printed.a && solved.b == printed.b && solved.c == printed.c)) {
        res.failures.push_back(fail(suite, &t, std::nullopt,
                                    label + ": solved Binet coefficients differ from the closed-form"
                                            " coefficients"));
      }
      if (!solved.a.is_rational() || !(solved.b.conjugate() == solved.c)) {
        res.failures.push_back(fail(suite, &t, std::nullopt,
                                    label + ": A must be rational and B, C conjugate"));
      }
      if (family == Family::s) {
        const BinetCoefficients literal = literal_paper_coefficients(family, point);
        if (literal.a != solved.a) ++res.s_literal_a_mismatches;
        if (literal.b != solved.b || literal.c != solved.c) ++res.s_literal_bc_mismatches;
        if (printed.a == solved.a && printed.b == solved.b && printed.c == solved.c) {
          ++res.s_corrected_matches;
        }
      }

      QuadExt p1 = QuadExt::scalar(1, d);
      QuadExt p2 = p1;
      QuadExt p3 = p1;
      const QuadExt w1 = rts.w1_ext();
      for (long n = 0; n <= max_n; ++n) {
        const QuadExt value = solved.a * p1 + solved.b * p2 + solved.c * p3;
        if (!value.is_rational()) {
          res.failures.push_back(fail(suite, &t, n,
                                      label + ": W-part of the Binet combination is " +
                                          value.b().get_str()));
        } else {
          const Rational expected = compact_eval_in_z(rows[fi][static_cast<std::size_t>(n)], point.z);
          if (value.a() != expected) {
            res.failures.push_back(fail(suite, &t, n,
                                        label + ": Binet value " + value.a().get_str() +
                                            " != recurrence value " + expected.get_str()));
          }
        }
        if (family == Family::r) {
          const auto idx = static_cast<std::size_t>(n);
          const QuadExt sum = p2 + p3;
          const QuadExt diff = p3 - p2;
          if (!sum.is_rational() || sum.a() != sums.p[idx].eval(t)) {
            res.failures.push_back(fail(suite, &t, n, "power sum p_n(t) != w2^n + w3^n"));
          }
          if (sgn(diff.a()) != 0 || diff.b() != sums.q[idx].eval(t)) {
            res.failures.push_back(
                fail(suite, &t, n, "power sum q_n(t) != (w2^n - w3^n)/(w2 - w3)"));
          }
        }
        p1 *= w1;
        p2 *= rts.w2;
        p3 *= rts.w3;
      }
    } catch (const std::exception& e) {
      res.failures.push_back(fail(suite, &t, std::nullopt, label + ": " + e.what()));
    }
  }
  return res;
}

PointResult xi_at_point(const Rational& t, long max_n, const std::vector<CompactPell>& r_rows) {
  const std::string suite = "xi";
  PointResult res;
  try {
    const SubstitutionPoint point = substitution_chain(t);
    const Rational five_3t = 5 - 3 * t;
    for (long n = 0; n <= max_n; ++n) {
      const XiCheck xi = xi_check(n, point);
      if (sgn(xi.wpart) != 0) {
        res.failures.push_back(fail(suite, &t, n, "W-part of Xi is " + xi.wpart.get_str()));
      }
      if (xi.scalar != xi.double_sum) {
        res.failures.push_back(fail(suite, &t, n,
                                    "Xi scalar " + xi.scalar.get_str() + " != double sum " +
                                        xi.double_sum.get_str()));
      }
      const Rational r_norm = compact_eval_in_z(r_rows[static_cast<std::size_t>(n)], point.z);
      const Rational lhs = (1 + 3 * t) * r_norm;
      const Rational rhs = -pow(Rational(1 - t), n) + xi.scalar / five_3t * pow2(-(n + 1));
      if (lhs != rhs) {
        res.failures.push_back(fail(suite, &t, n,
                                    "(1+3t) r_n / x^{n-1} != -(1-t)^n + Xi/2^{n+1}"));
      }
    }
  } catch (const std::exception& e) {
    res.failures.push_back(fail(suite, &t, std::nullopt, e.what()));
  }
  return res;
}

PointResult roots_at_point(const Rational& t) {
  PointResult res;
  try {
    const RootCheckReport report = char_root_check(substitution_chain(t));
    for (const auto& name : report.failing()) {
      res.failures.push_back(fail("roots", &t, std::nullopt, "nonzero residual " + name));
    }
  } catch (const std::exception& e) {
    res.failures.push_back(fail("roots", &t, std::nullopt, e.what()));
  }
  return res;
}

}  // namespace

// ---------------------------------------------------------------------------

VerificationReport verify_closed_form(const VerifyOptions& opts) {
  VerificationReport report;
  report.suite = "closed-form";
  report.max_n = pick_max_n(opts, 300);
  const auto per_family = parallel_map(std::size(kFamilies), opts.workers, [&](std::size_t fi) {
    const Family family = kFamilies[fi];
    std::pair<long, std::vector<Failure>> out;
    const auto rows = coefficient_triangle(family, report.max_n);
    for (long n = closed_form_min_index(family); n <= report.max_n; ++n) {
      ++out.first;
      try {
        if (closed_form(family, n) != rows[static_cast<std::size_t>(n)]) {
          out.second.push_back(fail("closed-form", nullptr, n,
                                    family_label(family) + ": closed form != recurrence"));
        }
      } catch (const std::exception& e) {
        out.second.push_back(fail("closed-form", nullptr, n, family_label(family) + ": " + e.what()));
      }
    }
    return out;
  });
  for (const auto& [count, failures] : per_family) {
    report.points_checked += count;
    report.failures.insert(report.failures.end(), failures.begin(), failures.end());
  }
  return report;
}

VerificationReport verify_binet(const VerifyOptions& opts) {
  VerificationReport report;
  report.suite = "binet";
  report.seed = opts.seed;
  report.max_n = pick_max_n(opts, 80);
  const auto ts = sample_t_values(opts.t_samples, opts.seed);
  std::vector<std::vector<CompactPell>> rows;
  for (Family f : kFamilies) rows.push_back(coefficient_triangle(f, report.max_n));
  const PowerSums sums = power_sums(report.max_n);

  const auto results = parallel_map(ts.size(), opts.workers, [&](std::size_t i) {
    return binet_at_point(ts[i], report.max_n, rows, sums);
  });
  long literal_a = 0;
  long literal_bc = 0;
  long corrected = 0;
  for (const auto& r : results) {
    report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
    literal_a += r.s_literal_a_mismatches;
    literal_bc += r.s_literal_bc_mismatches;
    corrected += r.s_corrected_matches;
  }
  report.points_checked = static_cast<long>(ts.size());
  const std::string of = "/" + std::to_string(ts.size());
  report.notes.push_back(
      "s-family B, C as printed have a rational second term (3t^2-3t-2)/((t^2-1)(3t+1)(3t-5)); "
      "read literally they disagree with the linear solve at " + std::to_string(literal_bc) + of +
      " sampled points");
  report.notes.push_back(
      "s-family A as printed, 2t/((1+3t)(t-1)), disagrees with the linear solve at " +
      std::to_string(literal_a) + of + " sampled points; A + B + C = s_0 = 0 requires "
      "A = -2t/((1+3t)(t-1))");
  report.notes.push_back(
      "s-family with the second term of B, C multiplied by W = sqrt((1+t)(5-3t)) and A negated "
      "agrees with the linear solve at " + std::to_string(corrected) + of + " sampled points");
  return report;
}

VerificationReport verify_xi(const VerifyOptions& opts) {
  VerificationReport report;
  report.suite = "xi";
  report.seed = opts.seed;
  report.max_n = pick_max_n(opts, 50);
  const auto ts = sample_t_values(opts.t_samples, opts.seed);
  const auto r_rows = coefficient_triangle(Family::r, report.max_n);
  const auto results = parallel_map(ts.size(), opts.workers, [&](std::size_t i) {
    return xi_at_point(ts[i], report.max_n, r_rows);
  });
  for (const auto& r : results) {
    report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
  }
  report.points_checked = static_cast<long>(ts.size());
  return report;
}

VerificationReport verify_lagrange(const LagrangeOptions& opts) {
  const std::string suite = "lagrange";
  VerificationReport report;
  report.suite = suite;
  report.max_n = opts.inversion_order;

  try {
    const InversionCheck inv = verify_inversion(opts.inversion_order);
    ++report.points_checked;
    if (!inv.ok()) {
      report.failures.push_back(fail(suite, nullptr, *inv.first_bad_index,
                                     "u(u-2)^2 composed with u(z) differs from z"));
    }
  } catch (const std::exception& e) {
    report.failures.push_back(fail(suite, nullptr, std::nullopt, e.what()));
  }

  const Rational expected_u[] = {make_rational(1, 4), make_rational(1, 16), make_rational(7, 256)};
  for (long order = 1; order <= 3; ++order) {
    const RatSeries u = u_series(order);
    for (long k = 1; k <= order; ++k) {
      if (u[static_cast<std::size_t>(k)] != expected_u[k - 1]) {
        report.failures.push_back(fail(suite, nullptr, k, "u-series coefficient mismatch"));
      }
    }
  }

  for (long n = 0; n <= opts.first_term_max_n; ++n) {
    ++report.points_checked;
    try {
      first_term_series(n, opts.first_term_max_l + 1);
    } catch (const std::exception& e) {
      report.failures.push_back(fail(suite, nullptr, n, e.what()));
    }
  }

  for (long n = 1; n <= opts.bridge_max_n; ++n) {
    ++report.points_checked;
    try {
      if (!truncation_bridge(n).ok()) {
        report.failures.push_back(
            fail(suite, nullptr, n, "sign-mapped first-term prefix != compact coefficients of r_n"));
      }
    } catch (const std::exception& e) {
      report.failures.push_back(fail(suite, nullptr, n, e.what()));
    }
  }

  const Rational ratio = radius_estimate(opts.radius_order);
  const Rational target = make_rational(27, 32);
  const Rational gap = abs(ratio - target);
  if (!(gap <= make_rational(1, 20))) {
    report.failures.push_back(fail(suite, nullptr, opts.radius_order,
                                   "u_n/u_{n-1} = " + to_decimal(ratio, 6) +
                                       " not within 0.05 of 27/32"));
  }
  report.notes.push_back("u_" + std::to_string(opts.radius_order) + "/u_" +
                         std::to_string(opts.radius_order - 1) + " = " + to_decimal(ratio, 9) +
                         " (27/32 = 0.84375)");
  if (z_of_u(make_rational(2, 3)) != make_rational(32, 27)) {
    report.failures.push_back(fail(suite, nullptr, std::nullopt, "z(2/3) != 32/27"));
  }
  return report;
}

VerificationReport verify_lagrange(const VerifyOptions& opts) {
  LagrangeOptions lo;
  lo.inversion_order = pick_max_n(opts, lo.inversion_order);
  if (lo.inversion_order < 1) lo.inversion_order = 1;
  return verify_lagrange(lo);
}

VerificationReport verify_roots(const VerifyOptions& opts) {
  VerificationReport report;
  report.suite = "roots";
  report.seed = opts.seed;
  report.max_n = 0;
  const auto ts = sample_t_values(opts.t_samples, opts.seed);
  const auto results =
      parallel_map(ts.size(), opts.workers, [&](std::size_t i) { return roots_at_point(ts[i]); });
  for (const auto& r : results) {
    report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
  }
  report.points_checked = static_cast<long>(ts.size());
  return report;
}

VerificationReport run_suite(std::string_view suite, const VerifyOptions& opts) {
  if (suite == "closed-form") return verify_closed_form(opts);
  if (suite == "binet") return verify_binet(opts);
  if (suite == "xi") return verify_xi(opts);
  if (suite == "lagrange") return verify_lagrange(opts);
  if (suite == "roots") return verify_roots(opts);
  if (suite == "all") {
    std::vector<VerificationReport> parts;
    parts.push_back(verify_closed_form(opts));
    parts.push_back(verify_binet(opts));
    parts.push_back(verify_xi(opts));
    parts.push_back(verify_lagrange(opts));
    parts.push_back(verify_roots(opts));
    return aggregate("all", std::move(parts));
  }
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace pell3
