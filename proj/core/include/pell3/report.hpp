#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pell3 {

struct Failure {
  std::string suite;
  std::optional<std::string> t;  // exact rational, "num/den"
  std::optional<long> n;
  std::string message;
};

// Rendered as {"suite", "points_checked", "max_n", "failures": [...], "notes": [...]},
// plus "seed" for suites that sample t and nested "suites" for aggregate runs.
struct VerificationReport {
  std::string suite;
  long points_checked = 0;
  long max_n = 0;
  std::optional<std::uint64_t> seed;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  std::vector<VerificationReport> suites;

  bool ok() const { return failures.empty(); }
  std::string to_json(int indent = 2) const;
};

// Folds sub-reports into one named aggregate: counts add, max_n is the
// maximum, failures and notes are concatenated in order.
VerificationReport aggregate(std::string suite, std::vector<VerificationReport> parts);

}  // namespace pell3
