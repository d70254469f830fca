#include "pell3/poly.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pell3/errors.hpp"

namespace pell3 {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::r:
      return "r";
    case Family::s:
      return "s";
    case Family::sigma:
      return "sigma";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "r") return Family::r;
  if (name == "s") return Family::s;
  if (name == "sigma" || name == "\xCF\x83") return Family::sigma;
  throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected r, s or sigma)");
}

// ---------------------------------------------------------------------------
// DensePoly

DensePoly::DensePoly(std::vector<BigInteger> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DensePoly DensePoly::monomial(BigInteger c, std::size_t exponent) {
  std::vector<BigInteger> coeffs(exponent + 1);
  coeffs[exponent] = std::move(c);
  return DensePoly(std::move(coeffs));
}

void DensePoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInteger DensePoly::coeff(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : BigInteger(0);
}

Rational DensePoly::eval(const Rational& x0) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x0;
    acc += *it;
  }
  return acc;
}

DensePoly& DensePoly::operator+=(const DensePoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

DensePoly operator*(const DensePoly& lhs, const DensePoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInteger> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return DensePoly(std::move(out));
}

DensePoly operator*(const BigInteger& c, const DensePoly& p) {
  std::vector<BigInteger> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return DensePoly(std::move(out));
}

Rational eval_rational(const DensePoly& p, const Rational& x0) { return p.eval(x0); }

// ---------------------------------------------------------------------------
// CompactPell

std::size_t CompactPell::slot_count(Family family, long n) {
  const long top = n - delta(family);
  return top < 0 ? 0 : static_cast<std::size_t>(top / 3 + 1);
}

DensePoly to_dense(const CompactPell& p) {
  if (p.coeffs.empty()) return {};
  const long top = p.exponent_of(0);
  std::vector<BigInteger> coeffs(static_cast<std::size_t>(top) + 1);
  for (std::size_t l = 0; l < p.coeffs.size(); ++l) {
    coeffs[static_cast<std::size_t>(p.exponent_of(l))] = p.coeffs[l];
  }
  return DensePoly(std::move(coeffs));
}

CompactPell from_dense(Family family, long n, const DensePoly& dense) {
  CompactPell out{family, n, std::vector<BigInteger>(CompactPell::slot_count(family, n))};
  for (std::size_t e = 0; e < dense.coeffs().size(); ++e) {
    const auto& c = dense.coeffs()[e];
    if (sgn(c) == 0) continue;
    const long gap = n - delta(family) - static_cast<long>(e);
    if (gap < 0 || gap % 3 != 0) {
      throw DomainError("exponent " + std::to_string(e) + " does not fit the lacunary layout of " +
                        std::string(family_name(family)) + "_" + std::to_string(n));
    }
    out.coeffs[static_cast<std::size_t>(gap / 3)] = c;
  }
  return out;
}

Rational compact_eval_in_z(const CompactPell& p, const Rational& z0) {
  const Rational step = -z0;
  Rational acc = 0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc *= step;
    acc += *it;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_plain(const DensePoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = p.degree(); e >= 0; --e) {
    const BigInteger& c = p.coeffs()[static_cast<std::size_t>(e)];
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const BigInteger mag = abs(c);
    if (e == 0 || mag != 1) os << mag.get_str();
    if (e >= 1) os << var;
    if (e >= 2) os << '^' << e;
    first = false;
  }
  return os.str();
}

std::string render_plain(const CompactPell& p) { return render_plain(to_dense(p)); }

std::string render_json(const CompactPell& p, int indent) {
  nlohmann::ordered_json j;
  j["family"] = family_name(p.family);
  j["n"] = p.n;
  auto terms = nlohmann::ordered_json::array();
  for (std::size_t l = 0; l < p.coeffs.size(); ++l) {
    if (sgn(p.coeffs[l]) == 0) continue;
    nlohmann::ordered_json term;
    term["exp"] = p.exponent_of(l);
    term["coeff"] = p.coeffs[l].get_str();
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j.dump(indent);
}

CompactPell parse_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  const Family family = parse_family(j.at("family").get<std::string>());
  const long n = j.at("n").get<long>();
  if (n < 0) throw DomainError("polynomial index must be nonnegative");
  std::vector<BigInteger> dense_coeffs;
  for (const auto& term : j.at("terms")) {
    const long e = term.at("exp").get<long>();
    if (e < 0) throw DomainError("negative exponent in polynomial JSON");
    if (dense_coeffs.size() <= static_cast<std::size_t>(e)) {
      dense_coeffs.resize(static_cast<std::size_t>(e) + 1);
    }
    dense_coeffs[static_cast<std::size_t>(e)] += parse_integer(term.at("coeff").get<std::string>());
  }
  return from_dense(family, n, DensePoly(std::move(dense_coeffs)));
}

std::string render_csv(const CompactPell& p) {
  std::ostringstream os;
  os << "exp,coeff\n";
  for (std::size_t l = 0; l < p.coeffs.size(); ++l) {
    if (sgn(p.coeffs[l]) == 0) continue;
    os << p.exponent_of(l) << ',' << p.coeffs[l].get_str() << '\n';
  }
  return os.str();
}

}  // namespace pell3
