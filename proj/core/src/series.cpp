#include "pell3/series.hpp"

#include <algorithm>

#include <json.hpp>

#include "pell3/errors.hpp"

namespace pell3 {

RatSeries RatSeries::constant(const Rational& c, std::size_t order) {
  RatSeries s = zero(order);
  if (order > 0) s.coeffs_[0] = c;
  return s;
}

RatSeries RatSeries::variable(std::size_t order) {
  RatSeries s = zero(order);
  if (order > 1) s.coeffs_[1] = 1;
  return s;
}

std::size_t RatSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return i;
  }
  return coeffs_.size();
}

RatSeries RatSeries::truncated(std::size_t order) const {
  std::vector<Rational> c(order);
  const std::size_t keep = std::min(order, coeffs_.size());
  std::copy_n(coeffs_.begin(), keep, c.begin());
  return RatSeries(std::move(c));
}

RatSeries RatSeries::operator-() const {
  RatSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RatSeries operator+(const RatSeries& lhs, const RatSeries& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = lhs.coeffs_[i] + rhs.coeffs_[i];
  return RatSeries(std::move(c));
}

RatSeries operator-(const RatSeries& lhs, const RatSeries& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = lhs.coeffs_[i] - rhs.coeffs_[i];
  return RatSeries(std::move(c));
}

RatSeries operator*(const RatSeries& lhs, const RatSeries& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return RatSeries(std::move(c));
}

RatSeries operator*(const Rational& k, const RatSeries& s) {
  RatSeries out = s;
  for (auto& c : out.coeffs_) c *= k;
  return out;
}

RatSeries operator+(const RatSeries& s, const Rational& k) {
  RatSeries out = s;
  if (!out.coeffs_.empty()) out.coeffs_[0] += k;
  return out;
}

bool operator==(const RatSeries& lhs, const RatSeries& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  return std::equal(lhs.coeffs_.begin(), lhs.coeffs_.begin() + static_cast<std::ptrdiff_t>(n),
                    rhs.coeffs_.begin());
}

RatSeries ser_add(const RatSeries& lhs, const RatSeries& rhs) { return lhs + rhs; }
RatSeries ser_mul(const RatSeries& lhs, const RatSeries& rhs) { return lhs * rhs; }

RatSeries ser_pow(const RatSeries& s, unsigned long k) {
  RatSeries result = RatSeries::constant(1, s.order());
  RatSeries square = s;
  while (k != 0) {
    if (k & 1UL) result = result * square;
    k >>= 1U;
    if (k != 0) square = square * square;
  }
  return result;
}

RatSeries ser_reciprocal(const RatSeries& s) {
  if (s.order() == 0) return s;
  if (sgn(s[0]) == 0) throw NonUnitSeries("reciprocal of a series with zero constant term");
  const std::size_t n = s.order();
  const Rational inv0 = Rational(1) / s[0];
  std::vector<Rational> b(n);
  b[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (sgn(s[j]) == 0) continue;
      acc += s[j] * b[k - j];
    }
    b[k] = -acc * inv0;
  }
  return RatSeries(std::move(b));
}

RatSeries ser_compose(const RatSeries& outer, const RatSeries& inner) {
  if (inner.order() > 0 && sgn(inner[0]) != 0) {
    throw CompositionDomainError("inner series of a composition must have zero constant term");
  }
  const std::size_t n = std::min(outer.order(), inner.order());
  const RatSeries in = inner.truncated(n);
  // Horner: (((a_{n-1}) g + a_{n-2}) g + ... ) g + a_0.
  RatSeries acc = RatSeries::zero(n);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * in + outer[i];
  }
  return acc;
}

std::string series_json(const RatSeries& s, std::size_t from, int indent) {
  auto arr = nlohmann::json::array();
  for (std::size_t i = from; i < s.order(); ++i) arr.push_back(to_fraction_string(s[i]));
  return arr.dump(indent);
}

}  // namespace pell3
