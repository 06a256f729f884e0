#include "blackwell/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blackwell {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  if (sgn(c) == 0) return {};
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::one_minus_x() { return Polynomial({Rational(1), Rational(-1)}); }

Polynomial Polynomial::linear_factor(const Rational& root) {
  return Polynomial({Rational(-root), Rational(1)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  Rational term;
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      term = lhs.coeffs_[i] * rhs.coeffs_[j];
      out[i + j] += term;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) os << blackwell::to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

DivMod divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {Polynomial{}, dividend};

  std::vector<Rational> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dd = d.size() - 1;
  std::vector<Rational> quot(rem.size() - dd);
  const Rational lead_inv = 1 / divisor.leading();
  Rational t;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + dd] * lead_inv;
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      t = q * d[j];
      rem[k + j] -= t;
    }
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& dividend, const Polynomial& divisor) {
  DivMod dm = divmod(dividend, divisor);
  if (!dm.remainder.is_zero()) throw std::logic_error("polynomial division is not exact");
  return std::move(dm.quotient);
}

namespace {

// Divides by (x - root) when root is a zero of p; returns false otherwise.
bool try_deflate(std::vector<Rational>& coeffs, const Rational& root) {
  // Synthetic division, highest power first.
  const std::size_t n = coeffs.size();
  if (n == 0) return false;
  std::vector<Rational> quot(n - 1);
  Rational carry;
  for (std::size_t k = n; k-- > 1;) {
    carry = carry * root + coeffs[k];
    quot[k - 1] = carry;
  }
  Rational rem = carry * root + coeffs[0];
  if (sgn(rem) != 0) return false;
  coeffs = std::move(quot);
  return true;
}

}  // namespace

OneMinusXSplit split_at_one(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("multiplicity of x = 1 in the zero polynomial is undefined");
  std::vector<Rational> coeffs = p.coefficients();
  std::size_t m = 0;
  while (coeffs.size() > 1 && try_deflate(coeffs, Rational(1))) ++m;
  Polynomial cofactor(std::move(coeffs));
  // (x - 1)^m = (-1)^m (1 - x)^m
  if (m % 2 == 1) cofactor = -cofactor;
  return {m, std::move(cofactor)};
}

std::size_t multiplicity_at_one(const Polynomial& p) { return split_at_one(p).multiplicity; }

std::size_t root_multiplicity(const Polynomial& p, const Rational& root) {
  if (p.is_zero()) throw std::domain_error("root multiplicity in the zero polynomial is undefined");
  std::vector<Rational> coeffs = p.coefficients();
  std::size_t m = 0;
  while (coeffs.size() > 1 && try_deflate(coeffs, root)) ++m;
  return m;
}

std::size_t multiplicity_at_zero(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("multiplicity of x = 0 in the zero polynomial is undefined");
  const auto& c = p.coefficients();
  std::size_t m = 0;
  while (sgn(c[m]) == 0) ++m;
  return m;
}

namespace {

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

}  // namespace

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  return exact_quotient(p, gcd(p, p.derivative()));
}

Polynomial odd_multiplicity_part(const Polynomial& p) {
  if (p.degree() <= 0) return Polynomial::constant(1);
  // Yun's algorithm: p = c * prod_i a_i^i with a_i squarefree and coprime.
  const Polynomial dp = p.derivative();
  const Polynomial a0 = gcd(p, dp);
  Polynomial b = exact_quotient(p, a0);
  Polynomial c = exact_quotient(dp, a0);
  Polynomial d = c - b.derivative();
  Polynomial odd = Polynomial::constant(1);
  for (std::size_t i = 1; b.degree() > 0; ++i) {
    Polynomial a = gcd(b, d);
    if (i % 2 == 1) odd *= a;
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
  }
  return monic(odd);
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(p.leading()) < 0) scale = -scale;
  return p * scale;
}

Polynomial pow(const Polynomial& base, std::size_t exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace blackwell
