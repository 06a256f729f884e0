#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "blackwell/rational.hpp"

namespace blackwell {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// powers. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);
  /// 1 - x
  static Polynomial one_minus_x();
  /// x - root
  static Polynomial linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  /// Precondition: not the zero polynomial.
  const Rational& leading() const { return coeffs_.back(); }

  /// Horner evaluation.
  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest power first, e.g. "5*g^3 - 20*g^2 + 25*g - 10".
  std::string to_string(std::string_view var = "g") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division. Throws std::domain_error when the divisor is zero.
DivMod divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Quotient of an exact division. Throws std::logic_error on a nonzero remainder.
Polynomial exact_quotient(const Polynomial& dividend, const Polynomial& divisor);

/// p = (1 - x)^multiplicity * cofactor with cofactor(1) != 0.
struct OneMinusXSplit {
  std::size_t multiplicity = 0;
  Polynomial cofactor;
};

/// Repeated synthetic division by (1 - x). Throws std::domain_error for zero.
OneMinusXSplit split_at_one(const Polynomial& p);

/// Largest m such that (1 - x)^m divides p. Throws std::domain_error for zero.
std::size_t multiplicity_at_one(const Polynomial& p);

/// Multiplicity of the root `root` in p (repeated division by x - root).
std::size_t root_multiplicity(const Polynomial& p, const Rational& root);

/// Number of vanishing low-order coefficients, i.e. the multiplicity of x = 0.
std::size_t multiplicity_at_zero(const Polynomial& p);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'): same distinct roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// Product of the squarefree factors of odd multiplicity (Yun's decomposition).
/// Its real roots are exactly the roots where p changes sign.
Polynomial odd_multiplicity_part(const Polynomial& p);

/// Scalar multiple of p with coprime integer coefficients and positive leading
/// coefficient. The zero polynomial maps to itself.
Polynomial primitive_part(const Polynomial& p);

Polynomial pow(const Polynomial& base, std::size_t exponent);

}  // namespace blackwell
