#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pell3/binet.hpp"
#include "pell3/errors.hpp"
#include "pell3/lagrange.hpp"
#include "pell3/numeric.hpp"
#include "pell3/pell.hpp"
#include "pell3/series.hpp"
#include "pell3/verify.hpp"

namespace pell3::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFamilyNames{"r", "s", "sigma"};

Family family_arg(const std::string& name) {
  try {
    return parse_family(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

nlohmann::ordered_json quad_json(const QuadExt& e) {
  nlohmann::ordered_json j;
  j["a"] = to_fraction_string(e.a());
  j["b"] = to_fraction_string(e.b());
  return j;
}

struct Options {
  std::string family = "r";
  long n = 0;
  long max_n = -1;
  long order = 1;
  std::string eval_format;
  std::string coeffs_format;
  std::string triangle_format;
  std::string series_format;
  std::string demo_format;
  std::string method = "recurrence";
  std::string suite = "all";
  std::size_t t_samples = kDefaultTSamples;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 0;
  std::string t = "1/2";
  std::string curve = "z-of-u";
  std::string from = "-1/3";
  std::string to = "2";
  long steps = 8;
  std::string x = "1";
  double tolerance = 1e-8;
};

// ---------------------------------------------------------------------------

int cmd_eval(const Options& o, std::ostream& out) {
  const CompactPell p = recurrence_gen(family_arg(o.family), o.n);
  if (o.eval_format == "plain") {
    out << render_plain(p) << '\n';
  } else if (o.eval_format == "csv") {
    out << render_csv(p);
  } else {
    out << render_json(p) << '\n';
  }
  return kOk;
}

int cmd_coeffs(const Options& o, std::ostream& out) {
  const Family family = family_arg(o.family);
  CompactPell p;
  if (o.method == "closed-form") {
    try {
      p = closed_form(family, o.n);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  } else {
    p = recurrence_gen(family, o.n);
  }
  if (o.coeffs_format == "plain") {
    for (std::size_t l = 0; l < p.coeffs.size(); ++l) out << (l ? " " : "") << p.coeffs[l].get_str();
    out << '\n';
    return kOk;
  }
  nlohmann::ordered_json j;
  j["family"] = family_name(family);
  j["n"] = o.n;
  j["method"] = o.method;
  j["delta"] = delta(family);
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(c.get_str());
  j["coeffs"] = std::move(coeffs);
  out << j.dump() << '\n';
  return kOk;
}

int cmd_triangle(const Options& o, std::ostream& out) {
  const Family family = family_arg(o.family);
  const auto rows = coefficient_triangle(family, o.max_n);
  if (o.triangle_format == "json") {
    out << triangle_json(family, rows) << '\n';
  } else {
    out << triangle_csv(rows);
  }
  return kOk;
}

int cmd_series(const Options& o, std::ostream& out) {
  const RatSeries u = u_series(o.order);
  if (o.series_format == "plain") {
    for (long k = 1; k <= o.order; ++k) {
      out << "z^" << k << ": " << to_fraction_string(u[static_cast<std::size_t>(k)]) << '\n';
    }
  } else if (o.series_format == "csv") {
    out << "n,coeff\n";
    for (long k = 1; k <= o.order; ++k) {
      out << k << ',' << to_fraction_string(u[static_cast<std::size_t>(k)]) << '\n';
    }
  } else {
    out << series_json(u, 1) << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, bool seed_given, std::ostream& out, std::ostream& err) {
  VerifyOptions vo;
  vo.max_n = o.max_n;
  vo.t_samples = o.t_samples;
  vo.seed = o.seed;
  vo.workers = o.workers;
  if (!seed_given) {
    if (const char* env = std::getenv("PELL3_SEED"); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        vo.seed = std::stoull(env, &used);
        if (used != std::string_view(env).size()) throw std::invalid_argument("trailing input");
      } catch (const std::exception&) {
        throw UsageError(std::string("PELL3_SEED is not an unsigned integer: '") + env + "'");
      }
    }
  }
  const VerificationReport report = run_suite(o.suite, vo);
  out << report.to_json() << '\n';
  for (const auto& f : report.failures) {
    err << "FAIL suite=" << f.suite << " t=" << f.t.value_or("-")
        << " n=" << (f.n ? std::to_string(*f.n) : std::string("-")) << ": " << f.message << '\n';
  }
  return report.ok() ? kOk : kIdentityFailure;
}

int cmd_binet(const Options& o, std::ostream& out) {
  const Family family = family_arg(o.family);
  const Rational t = rational_arg(o.t, "--t");
  SubstitutionPoint point;
  try {
    point = substitution_chain(t);
  } catch (const DegenerateParameter& e) {
    throw UsageError(e.what());
  }
  const BinetCoefficients coeffs = solve_coefficients(family, point);
  const QuadExt value = binet_combination(coeffs, roots(point), static_cast<std::uint64_t>(o.n));
  const Rational expected = compact_eval_in_z(recurrence_gen(family, o.n), point.z);

  nlohmann::ordered_json j;
  j["family"] = family_name(family);
  j["n"] = o.n;
  j["t"] = to_fraction_string(point.t);
  j["u"] = to_fraction_string(point.u);
  j["z"] = to_fraction_string(point.z);
  j["D"] = to_fraction_string(point.d);
  j["A"] = quad_json(coeffs.a);
  j["B"] = quad_json(coeffs.b);
  j["C"] = quad_json(coeffs.c);
  j["binet"] = quad_json(value);
  j["recurrence"] = to_fraction_string(expected);
  const bool ok = value.is_rational() && value.a() == expected;
  j["match"] = ok;
  out << j.dump(2) << '\n';
  return ok ? kOk : kIdentityFailure;
}

int cmd_plot_data(const Options& o, std::ostream& out) {
  if (o.curve != "z-of-u") throw UsageError("unknown curve '" + o.curve + "' (expected z-of-u)");
  const Rational from = rational_arg(o.from, "--from");
  const Rational to = rational_arg(o.to, "--to");
  if (!(from < to)) throw UsageError("--from must be less than --to");
  out << "u,z,u_exact,z_exact\n";
  for (const auto& [u, z] : z_of_u_samples(from, to, o.steps)) {
    out << to_decimal(u) << ',' << to_decimal(z) << ',' << to_fraction_string(u) << ','
        << to_fraction_string(z) << '\n';
  }
  return kOk;
}

int cmd_numeric_demo(const Options& o, std::ostream& out) {
  const Family family = family_arg(o.family);
  const Rational x = rational_arg(o.x, "--x");
  if (sgn(x) == 0) throw UsageError("--x must be nonzero");
  const auto rows = numeric_binet_demo(family, o.max_n, x);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.error);
  const bool ok = worst <= o.tolerance;

  if (o.demo_format == "json") {
    nlohmann::ordered_json j;
    j["family"] = family_name(family);
    j["x"] = to_fraction_string(x);
    j["tolerance"] = o.tolerance;
    j["max_error"] = worst;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["n"] = r.n;
      row["exact"] = to_fraction_string(r.exact);
      row["binet"] = r.binet;
      row["error"] = r.error;
      arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    out << j.dump(2) << '\n';
  } else {
    out << std::setw(4) << "n" << "  " << std::setw(26) << "exact" << "  " << std::setw(26)
        << "binet (float)" << "  " << "rel. error\n";
    for (const auto& r : rows) {
      std::ostringstream binet;
      binet << std::setprecision(17) << r.binet;
      out << std::setw(4) << r.n << "  " << std::setw(26) << to_decimal(r.exact, 6) << "  "
          << std::setw(26) << binet.str() << "  " << std::scientific << std::setprecision(3)
          << r.error << std::defaultfloat << '\n';
    }
    out << "max error " << std::scientific << std::setprecision(3) << worst << std::defaultfloat
        << (ok ? " <= " : " > ") << o.tolerance << '\n';
  }
  return ok ? kOk : kIdentityFailure;
}

int cmd_bench(const Options& o, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  const Family family = family_arg(o.family);
  if (o.n < closed_form_min_index(family)) {
    throw UsageError("bench needs n >= " + std::to_string(closed_form_min_index(family)) +
                     " for family " + std::string(family_name(family)));
  }
  const auto t0 = Clock::now();
  const CompactPell rec = recurrence_gen(family, o.n);
  const auto t1 = Clock::now();
  const CompactPell closed = closed_form(family, o.n);
  const auto t2 = Clock::now();
  const bool equal = rec == closed;

  nlohmann::ordered_json j;
  j["family"] = family_name(family);
  j["n"] = o.n;
  j["terms"] = rec.coeffs.size();
  j["recurrence_seconds"] = std::chrono::duration<double>(t1 - t0).count();
  j["closed_form_seconds"] = std::chrono::duration<double>(t2 - t1).count();
  j["equal"] = equal;
  out << j.dump() << '\n';
  return equal ? kOk : kIdentityFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Third-order Pell polynomials: exact generation and identity verification", "pell3"};
  app.require_subcommand(1);
  Options o;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "r | s | sigma")->required()->check(
        CLI::IsMember(kFamilyNames));
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Index n >= 0")->required()->check(CLI::NonNegativeNumber);
  };

  auto* eval = app.add_subcommand("eval", "Polynomial p_n by recurrence");
  add_family(eval);
  add_n(eval);
  eval->add_option("--format", o.eval_format, "json | plain | csv")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "plain", "csv"}));

  auto* coeffs = app.add_subcommand("coeffs", "Compact coefficients c_l of p_n");
  add_family(coeffs);
  add_n(coeffs);
  coeffs->add_option("--method", o.method, "recurrence | closed-form")
      ->check(CLI::IsMember({"recurrence", "closed-form"}));
  coeffs->add_option("--format", o.coeffs_format, "json | plain")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "plain"}));

  auto* triangle = app.add_subcommand("triangle", "Coefficient triangle, rows 0..max_n");
  add_family(triangle);
  triangle->add_option("--max-n", o.max_n, "Last row")->required()->check(CLI::NonNegativeNumber);
  triangle->add_option("--format", o.triangle_format, "csv | json")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* series = app.add_subcommand("series", "Coefficients u_1..u_order of the inverse series u(z)");
  series->add_option("--order", o.order, "Number of coefficients (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  series->add_option("--format", o.series_format, "json | plain | csv")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "plain", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run identity verification suites");
  verify->add_option("--suite", o.suite, "all | closed-form | binet | xi | lagrange | roots")
      ->check(CLI::IsMember({"all", "closed-form", "binet", "xi", "lagrange", "roots"}));
  verify->add_option("--max-n", o.max_n, "Largest index (default depends on the suite)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--t-samples", o.t_samples, "Number of sampled t values")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = verify->add_option("--seed", o.seed, "Sampling seed (env PELL3_SEED)");
  verify->add_option("--workers", o.workers, "Worker threads, 0 = all cores");

  auto* binet = app.add_subcommand("binet", "Exact Binet evaluation at a rational t");
  add_family(binet);
  add_n(binet);
  binet->add_option("--t", o.t, "Rational parameter, e.g. 1/2");

  auto* plot = app.add_subcommand("plot-data", "Sample z = u(u-2)^2 as CSV");
  plot->add_option("--curve", o.curve, "z-of-u");
  plot->add_option("--from", o.from, "Start (rational or decimal)");
  plot->add_option("--to", o.to, "End (rational or decimal)");
  plot->add_option("--steps", o.steps, "Number of samples (>= 2)")->check(CLI::Range(2L, 1000000L));

  auto* demo = app.add_subcommand("numeric-demo", "Floating-point Binet formula vs exact values");
  add_family(demo);
  demo->add_option("--n-max", o.max_n, "Largest n")->required()->check(CLI::NonNegativeNumber);
  demo->add_option("--x", o.x, "Evaluation point (nonzero decimal or rational)");
  demo->add_option("--tolerance", o.tolerance, "Exit 1 if the worst error exceeds this");
  demo->add_option("--format", o.demo_format, "plain | json")
      ->default_val("plain")
      ->check(CLI::IsMember({"plain", "json"}));

  auto* bench = app.add_subcommand("bench", "Time recurrence vs closed form");
  add_family(bench);
  bench->add_option("--n", o.n, "Index n >= 1")->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pell3: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (coeffs->parsed()) return cmd_coeffs(o, out);
    if (triangle->parsed()) return cmd_triangle(o, out);
    if (series->parsed()) return cmd_series(o, out);
    if (verify->parsed()) return cmd_verify(o, seed_opt->count() > 0, out, err);
    if (binet->parsed()) return cmd_binet(o, out);
    if (plot->parsed()) return cmd_plot_data(o, out);
    if (demo->parsed()) return cmd_numeric_demo(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const UsageError& e) {
    err << "pell3: " << e.what() << '\n';
    return kUsage;
  } catch (const IdentityViolation& e) {
    err << "pell3: identity violation: " << e.what() << '\n';
    return kIdentityFailure;
  } catch (const DomainError& e) {
    err << "pell3: " << e.what() << '\n';
    return kUsage;
  }
  err << "pell3: no subcommand\n";
  return kUsage;
}

}  // namespace pell3::cli
