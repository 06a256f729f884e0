#pragma once

#include <string>

#include "blackwell/polynomial.hpp"

namespace blackwell {

/// Rational function num/den in the discount factor.
///
/// Canonical form: every common factor (1 - x) is cancelled, and den is scaled
/// to a primitive integer polynomial with positive leading coefficient. Other
/// common factors are kept unless reduced() is called. The zero function is
/// stored as 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Polynomial& p);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws std::domain_error when x is a pole.
  Rational operator()(const Rational& x) const;

  /// Cancels the full polynomial gcd of num and den.
  RationalFunction reduced() const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  /// Throws std::domain_error for the zero function.
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  /// Identity as functions: num1 * den2 == num2 * den1.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string to_string(std::string_view var = "g") const;

 private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

enum class MuOrdering { Less, Equal, Greater };

/// Sign of p(x) for all x in a left neighbourhood of 1: the sign of the
/// cofactor after stripping (1 - x) factors, evaluated at 1. 0 for zero.
int sign_near_one(const Polynomial& p);

/// Sign of r on a left neighbourhood of 1; 0 iff r is the zero function.
int sign_near_one(const RationalFunction& r);

/// Order of r1 and r2 on a left neighbourhood of 1. Equal iff r1 - r2 is
/// identically zero.
MuOrdering mu_compare(const RationalFunction& r1, const RationalFunction& r2);

inline bool mu_equal(const RationalFunction& r1, const RationalFunction& r2) {
  return mu_compare(r1, r2) == MuOrdering::Equal;
}

const char* to_string(MuOrdering o);

}  // namespace blackwell
