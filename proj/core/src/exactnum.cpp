#include "pell3/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "pell3/errors.hpp"

namespace pell3 {

Rational make_rational(const BigInteger& num, const BigInteger& den) {
  if (sgn(den) == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInteger(num), BigInteger(den));
}

BigInteger gen_binomial(long m, long k) {
  if (k < 0) throw DomainError("gen_binomial: k must be nonnegative");
  if (m >= 0 && k > m) return 0;
  if (m >= 0) {
    BigInteger out;
    mpz_bin_ui(out.get_mpz_t(), BigInteger(m).get_mpz_t(), static_cast<unsigned long>(k));
    return out;
  }
  // Upper negation: C(m, k) = (-1)^k C(k - m - 1, k) for m < 0.
  BigInteger out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k - m - 1),
               static_cast<unsigned long>(k));
  if (k % 2 != 0) out = -out;
  return out;
}

Rational pow2(long e) {
  BigInteger p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  return make_rational(BigInteger(1), p);
}

Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (sgn(base) == 0) throw DivisionByZero("negative power of zero");
    return pow(Rational(1) / base, -e);
  }
  BigInteger num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  // Powers of coprime integers stay coprime.
  return Rational(num, den);
}

std::string to_string(const BigInteger& value) { return value.get_str(); }

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  BigInteger scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInteger num = abs(value.get_num()) * scale * 2 + value.get_den();
  BigInteger den = value.get_den() * 2;
  BigInteger scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = sgn(value) < 0 && sgn(scaled) != 0;
  return negative ? "-" + body : body;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigInteger parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  BigInteger out(std::string(digits), 10);
  return negative ? BigInteger(-out) : out;
}

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInteger num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    }
    BigInteger den(std::string(den_text), 10);
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    BigInteger num(digits.empty() ? std::string("0") : digits, 10);
    BigInteger den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q = make_rational(num, den);
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(text));
}

// ---------------------------------------------------------------------------
// QuadExt

QuadExt::QuadExt(Rational a, Rational b, Rational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

void QuadExt::require_same_field(const QuadExt& other) const {
  if (d_ != other.d_) {
    throw IncompatibleExtension("quadratic extensions differ: D = " + d_.get_str() +
                                " vs D = " + other.d_.get_str());
  }
}

Rational QuadExt::norm() const { return a_ * a_ - d_ * b_ * b_; }

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw DivisionByZero("element of zero norm is not invertible");
  return {a_ / n, -b_ / n, d_};
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  require_same_field(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  require_same_field(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  require_same_field(rhs);
  Rational a = a_ * rhs.a_ + d_ * b_ * rhs.b_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

QuadExt& QuadExt::operator+=(const Rational& rhs) {
  a_ += rhs;
  return *this;
}

QuadExt& QuadExt::operator-=(const Rational& rhs) {
  a_ -= rhs;
  return *this;
}

QuadExt& QuadExt::operator*=(const Rational& rhs) {
  a_ *= rhs;
  b_ *= rhs;
  return *this;
}

QuadExt& QuadExt::operator/=(const Rational& rhs) {
  if (sgn(rhs) == 0) throw DivisionByZero("division of extension element by zero");
  a_ /= rhs;
  b_ /= rhs;
  return *this;
}

bool operator==(const QuadExt& lhs, const QuadExt& rhs) {
  lhs.require_same_field(rhs);
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

double QuadExt::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

QuadExt pow(const QuadExt& base, std::uint64_t n) {
  QuadExt result = QuadExt::scalar(1, base.d());
  QuadExt square = base;
  while (n != 0) {
    if (n & 1U) result *= square;
    n >>= 1U;
    if (n != 0) square *= square;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& e) {
  return os << e.a().get_str() << " + (" << e.b().get_str() << ")*W [W^2=" << e.d().get_str()
            << "]";
}

}  // namespace pell3
