#include "pell3/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace pell3 {

namespace {

nlohmann::ordered_json to_json_value(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["points_checked"] = r.points_checked;
  j["max_n"] = r.max_n;
  if (r.seed) j["seed"] = *r.seed;
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json fj;
    fj["suite"] = f.suite;
    fj["t"] = f.t ? nlohmann::ordered_json(*f.t) : nlohmann::ordered_json(nullptr);
    fj["n"] = f.n ? nlohmann::ordered_json(*f.n) : nlohmann::ordered_json(nullptr);
    fj["message"] = f.message;
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  j["notes"] = r.notes;
  if (!r.suites.empty()) {
    auto subs = nlohmann::ordered_json::array();
    for (const auto& s : r.suites) subs.push_back(to_json_value(s));
    j["suites"] = std::move(subs);
  }
  return j;
}

}  // namespace

std::string VerificationReport::to_json(int indent) const { return to_json_value(*this).dump(indent); }

VerificationReport aggregate(std::string suite, std::vector<VerificationReport> parts) {
  VerificationReport out;
  out.suite = std::move(suite);
  for (const auto& p : parts) {
    out.points_checked += p.points_checked;
    out.max_n = std::max(out.max_n, p.max_n);
    if (p.seed) out.seed = p.seed;
    out.failures.insert(out.failures.end(), p.failures.begin(), p.failures.end());
    out.notes.insert(out.notes.end(), p.notes.begin(), p.notes.end());
  }
  out.suites = std::move(parts);
  return out;
}

}  // namespace pell3
