#include "pell3/pell.hpp"

#include <sstream>

#include <json.hpp>

#include "pell3/errors.hpp"

namespace pell3 {

namespace {

CompactPell make(Family family, long n, std::vector<BigInteger> coeffs) {
  return CompactPell{family, n, std::move(coeffs)};
}

// Row n from rows n-1 and n-3.
CompactPell step(const CompactPell& prev1, const CompactPell& prev3, long n) {
  const std::size_t slots = CompactPell::slot_count(prev1.family, n);
  std::vector<BigInteger> c(slots);
  for (std::size_t l = 0; l < slots; ++l) {
    if (l < prev1.coeffs.size()) c[l] = prev1.coeffs[l] * 2;
    if (l >= 1 && l - 1 < prev3.coeffs.size()) c[l] += prev3.coeffs[l - 1];
  }
  return make(prev1.family, n, std::move(c));
}

}  // namespace

std::array<CompactPell, 3> initial_values(Family family) {
  switch (family) {
    case Family::r:
      return {make(family, 0, {}), make(family, 1, {1}), make(family, 2, {2})};
    case Family::s:
      return {make(family, 0, {}), make(family, 1, {2}), make(family, 2, {2})};
    case Family::sigma:
      return {make(family, 0, {3}), make(family, 1, {2}), make(family, 2, {4})};
  }
  throw DomainError("unknown family");
}

CompactPell recurrence_gen(Family family, long n) {
  if (n < 0) throw DomainError("recurrence_gen: n must be nonnegative");
  auto window = initial_values(family);
  if (n < 3) return window[static_cast<std::size_t>(n)];
  // window[k] holds p_{m-3+k} before computing p_m.
  for (long m = 3; m <= n; ++m) {
    CompactPell next = step(window[2], window[0], m);
    window[0] = std::move(window[1]);
    window[1] = std::move(window[2]);
    window[2] = std::move(next);
  }
  return window[2];
}

long closed_form_min_index(Family family) {
  switch (family) {
    case Family::r:
      return 0;
    case Family::s:
      return 2;
    case Family::sigma:
      return 1;
  }
  return 0;
}

CompactPell closed_form(Family family, long n) {
  if (n < closed_form_min_index(family)) {
    throw DomainError("closed form for " + std::string(family_name(family)) + "_n needs n >= " +
                      std::to_string(closed_form_min_index(family)) + ", got " +
                      std::to_string(n));
  }
  CompactPell out{family, n, std::vector<BigInteger>(CompactPell::slot_count(family, n))};
  for (std::size_t slot = 0; slot < out.coeffs.size(); ++slot) {
    const long l = static_cast<long>(slot);
    Rational c;
    switch (family) {
      case Family::r:
        c = gen_binomial(n - 1 - 2 * l, l);
        c *= pow2(n - 1 - 3 * l);
        break;
      case Family::s: {
        c = make_rational(n - l - 1, n - 2 * l - 1);
        c *= gen_binomial(n - 2 * l - 1, l);
        c *= pow2(n - 1 - 3 * l);
        break;
      }
      case Family::sigma: {
        c = make_rational(n, n - 2 * l);
        c *= gen_binomial(n - 2 * l, l);
        c *= pow2(n - 3 * l);
        break;
      }
    }
    if (c.get_den() != 1) {
      throw IdentityViolation("closed form coefficient of " + std::string(family_name(family)) +
                              "_" + std::to_string(n) + " at l=" + std::to_string(l) +
                              " is not an integer: " + c.get_str());
    }
    out.coeffs[slot] = c.get_num();
  }
  return out;
}

std::vector<CompactPell> coefficient_triangle(Family family, long max_n) {
  if (max_n < 0) throw DomainError("coefficient_triangle: max_n must be nonnegative");
  auto init = initial_values(family);
  std::vector<CompactPell> rows;
  rows.reserve(static_cast<std::size_t>(max_n) + 1);
  for (long n = 0; n <= max_n; ++n) {
    if (n < 3) {
      rows.push_back(init[static_cast<std::size_t>(n)]);
    } else {
      const auto i = static_cast<std::size_t>(n);
      rows.push_back(step(rows[i - 1], rows[i - 3], n));
    }
  }
  return rows;
}

std::string triangle_csv(const std::vector<CompactPell>& rows) {
  std::ostringstream os;
  os << "n,l,coeff\n";
  for (const auto& row : rows) {
    for (std::size_t l = 0; l < row.coeffs.size(); ++l) {
      os << row.n << ',' << l << ',' << row.coeffs[l].get_str() << '\n';
    }
  }
  return os.str();
}

std::string triangle_json(Family family, const std::vector<CompactPell>& rows, int indent) {
  nlohmann::ordered_json j;
  j["family"] = family_name(family);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : row.coeffs) coeffs.push_back(c.get_str());
    r["coeffs"] = std::move(coeffs);
    arr.push_back(std::move(r));
  }
  j["rows"] = std::move(arr);
  return j.dump(indent);
}

}  // namespace pell3
