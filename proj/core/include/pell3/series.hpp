#pragma once

#include <string>
#include <vector>

#include "pell3/exactnum.hpp"

namespace pell3 {

// Truncated power series a_0 + a_1 z + ... + a_{N-1} z^{N-1} + O(z^N) with
// exact rational coefficients. N is the truncation order.
class RatSeries {
 public:
  RatSeries() = default;
  explicit RatSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  RatSeries(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {}

  static RatSeries zero(std::size_t order) { return RatSeries(std::vector<Rational>(order)); }
  static RatSeries constant(const Rational& c, std::size_t order);
  // The series variable z itself.
  static RatSeries variable(std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  // Zero when i is past the truncation order.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  // Index of the first nonzero coefficient; order() if all vanish.
  std::size_t valuation() const;

  RatSeries truncated(std::size_t order) const;

  RatSeries operator-() const;
  friend RatSeries operator+(const RatSeries& lhs, const RatSeries& rhs);
  friend RatSeries operator-(const RatSeries& lhs, const RatSeries& rhs);
  friend RatSeries operator*(const RatSeries& lhs, const RatSeries& rhs);
  friend RatSeries operator*(const Rational& c, const RatSeries& s);
  friend RatSeries operator+(const RatSeries& s, const Rational& c);

  // Coefficientwise up to the shared (minimum) order.
  friend bool operator==(const RatSeries& lhs, const RatSeries& rhs);

 private:
  std::vector<Rational> coeffs_;
};

RatSeries ser_add(const RatSeries& lhs, const RatSeries& rhs);
RatSeries ser_mul(const RatSeries& lhs, const RatSeries& rhs);
RatSeries ser_pow(const RatSeries& s, unsigned long k);

// Multiplicative inverse; throws NonUnitSeries when a_0 == 0.
RatSeries ser_reciprocal(const RatSeries& s);

// outer(inner(z)) by Horner accumulation. Requires inner(0) == 0, otherwise
// throws CompositionDomainError. Result order is min(outer, inner).
RatSeries ser_compose(const RatSeries& outer, const RatSeries& inner);

// JSON list of "num/den" strings.
std::string series_json(const RatSeries& s, std::size_t from = 0, int indent = -1);

}  // namespace pell3
