#pragma once

// Verification suites: each sweeps one family of identities and reports every
// failing (suite, t, n) case instead of stopping at the first.

#include <cstdint>
#include <string_view>

#include "pell3/report.hpp"

namespace pell3 {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kDefaultTSamples = 25;

struct VerifyOptions {
  // Negative selects the suite's own default (closed-form 300, binet 80,
  // xi 50, lagrange 64, roots 0).
  long max_n = -1;
  std::size_t t_samples = kDefaultTSamples;
  std::uint64_t seed = kDefaultSeed;
  // Worker threads for per-point sweeps; 0 means hardware concurrency.
  unsigned workers = 0;
};

// closed_form == recurrence_gen for r (n >= 0), s (n >= 2), sigma (n >= 1).
VerificationReport verify_closed_form(const VerifyOptions& opts);

// Per sampled t and family: solved coefficients vs printed ones, exact
// vanishing of the W-part, agreement with the recurrence for n <= max_n, and
// the power sums p_n, q_n against w2^n, w3^n.
VerificationReport verify_binet(const VerifyOptions& opts);

// The square-root cancellation: W-part zero, scalar equal to the binomial
// double sum, and (1+3t) r_n / x^{n-1} = -(1-t)^n + Xi / 2^{n+1}.
VerificationReport verify_xi(const VerifyOptions& opts);

struct LagrangeOptions {
  long inversion_order = 64;
  long first_term_max_n = 24;
  long first_term_max_l = 32;
  long bridge_max_n = 100;
  long radius_order = 60;
};

// Inversion by composition, first-term coefficients, truncation bridge,
// ratio test and the z(2/3) = 32/27 endpoint.
VerificationReport verify_lagrange(const LagrangeOptions& opts);
VerificationReport verify_lagrange(const VerifyOptions& opts);

// Characteristic-root residuals and reciprocity relations at each sampled t.
VerificationReport verify_roots(const VerifyOptions& opts);

// "all" | "closed-form" | "binet" | "xi" | "lagrange" | "roots".
// Throws std::invalid_argument for an unknown name.
VerificationReport run_suite(std::string_view suite, const VerifyOptions& opts);

}  // namespace pell3
