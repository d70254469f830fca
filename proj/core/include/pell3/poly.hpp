#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pell3/exactnum.hpp"

namespace pell3 {

// The three third-order Pell families. All share p_n = 2x p_{n-1} + p_{n-3}
// and differ in their initial values.
enum class Family { r, s, sigma };

// Exponent offset of the leading term: p_n has degree n - delta(family).
// 1 for r and s (Binet prefactor x^{n-1}), 0 for sigma (prefactor x^n).
constexpr long delta(Family f) { return f == Family::sigma ? 0 : 1; }

// "r", "s", "sigma".
std::string_view family_name(Family f);
// Accepts "r", "s", "sigma" and the Greek letter "σ". Throws std::invalid_argument.
Family parse_family(std::string_view name);

// Polynomial with integer coefficients; coeffs()[i] multiplies x^i.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<BigInteger> coeffs);

  static DensePoly monomial(BigInteger c, std::size_t exponent);

  const std::vector<BigInteger>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  // Zero for exponents beyond the degree.
  BigInteger coeff(std::size_t exponent) const;

  Rational eval(const Rational& x0) const;

  DensePoly& operator+=(const DensePoly& rhs);
  DensePoly& operator-=(const DensePoly& rhs);
  friend DensePoly operator+(DensePoly lhs, const DensePoly& rhs) { return lhs += rhs; }
  friend DensePoly operator-(DensePoly lhs, const DensePoly& rhs) { return lhs -= rhs; }
  friend DensePoly operator*(const DensePoly& lhs, const DensePoly& rhs);
  friend DensePoly operator*(const BigInteger& c, const DensePoly& p);

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  void trim();

  std::vector<BigInteger> coeffs_;
};

// Family polynomial of index n stored lacunarily: coeffs[l] multiplies
// x^{n - delta - 3l}; no other exponent can occur.
struct CompactPell {
  Family family = Family::r;
  long n = 0;
  std::vector<BigInteger> coeffs;

  // Number of slots, floor((n - delta)/3) + 1, or 0 when n < delta.
  static std::size_t slot_count(Family family, long n);
  long exponent_of(std::size_t slot) const { return n - delta(family) - 3 * static_cast<long>(slot); }

  friend bool operator==(const CompactPell&, const CompactPell&) = default;
};

DensePoly to_dense(const CompactPell& p);

// Inverse of to_dense. Throws DomainError if `dense` has a nonzero
// coefficient at an exponent the lacunary layout cannot hold.
CompactPell from_dense(Family family, long n, const DensePoly& dense);

Rational eval_rational(const DensePoly& p, const Rational& x0);

// Sum_l c_l (-z0)^l: the value of p(x) / x^{n-delta} under x^{-3} = -z0.
Rational compact_eval_in_z(const CompactPell& p, const Rational& z0);

// Descending exponents, e.g. "131072x^17+245760x^14+...+84x^2"; "0" when empty.
std::string render_plain(const DensePoly& p, char var = 'x');
std::string render_plain(const CompactPell& p);

// {"family": "r", "n": 18, "terms": [{"exp": 17, "coeff": "131072"}, ...]}
// Only nonzero terms are listed, in descending exponent order.
std::string render_json(const CompactPell& p, int indent = -1);
CompactPell parse_json(std::string_view text);

// One "exp,coeff" row per nonzero term after an "exp,coeff" header.
std::string render_csv(const CompactPell& p);

}  // namespace pell3
