#pragma once

// Exact numeric substrate: arbitrary-precision integers and rationals (GMP),
// generalized binomial coefficients and arithmetic in Q(W), W^2 = D.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pell3 {

using BigInteger = mpz_class;

// mpq_class results are canonical after every arithmetic operation; values
// built from raw numerator/denominator pairs go through make_rational.
using Rational = mpq_class;

Rational make_rational(const BigInteger& num, const BigInteger& den);
Rational make_rational(long num, long den = 1);

// C(m, k) = m (m-1) ... (m-k+1) / k! for any integer m and k >= 0.
BigInteger gen_binomial(long m, long k);

// 2^e for any integer e (negative e yields 1 / 2^-e).
Rational pow2(long e);

Rational pow(const Rational& base, long e);

// Decimal string of an integer.
std::string to_string(const BigInteger& value);

// Always "num/den", including integers ("3/1") and zero ("0/1").
std::string to_fraction_string(const Rational& value);

// Fixed-point decimal rendering with `digits` fractional digits, rounded
// half away from zero.
std::string to_decimal(const Rational& value, int digits = 12);

// Accepts "-7", "3/4", "-0.125", "1e-3" is rejected. Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);
BigInteger parse_integer(std::string_view text);

// Element a + b*W of the quadratic extension with W^2 = D.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a, Rational b, Rational d);

  static QuadExt scalar(Rational a, Rational d) { return {std::move(a), 0, std::move(d)}; }
  static QuadExt sqrt_d(Rational d) { return {0, 1, std::move(d)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadExt conjugate() const { return {a_, -b_, d_}; }
  // a^2 - D b^2; the element is a unit iff this is nonzero.
  Rational norm() const;
  QuadExt inverse() const;

  QuadExt operator-() const { return {-a_, -b_, d_}; }

  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);

  QuadExt& operator+=(const Rational& rhs);
  QuadExt& operator-=(const Rational& rhs);
  QuadExt& operator*=(const Rational& rhs);
  QuadExt& operator/=(const Rational& rhs);

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }

  friend QuadExt operator+(QuadExt lhs, const Rational& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const Rational& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const Rational& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const Rational& rhs) { return lhs /= rhs; }
  friend QuadExt operator+(const Rational& lhs, QuadExt rhs) { return rhs += lhs; }
  friend QuadExt operator*(const Rational& lhs, QuadExt rhs) { return rhs *= lhs; }
  friend QuadExt operator-(const Rational& lhs, const QuadExt& rhs) { return -rhs + lhs; }

  // Equal values in the same extension. Comparing across extensions throws.
  friend bool operator==(const QuadExt& lhs, const QuadExt& rhs);

  // Approximate real value, taking W as the positive square root of D.
  double to_double() const;

 private:
  void require_same_field(const QuadExt& other) const;

  Rational a_{0};
  Rational b_{0};
  Rational d_{0};
};

QuadExt pow(const QuadExt& base, std::uint64_t n);

std::ostream& operator<<(std::ostream& os, const QuadExt& e);

}  // namespace pell3
