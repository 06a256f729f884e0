#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace blackwell {

/// Exact rational number in canonical form (positive denominator, reduced).
using Rational = mpq_class;

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
/// anything else, including decimal notation and a zero denominator.
Rational parse_rational(std::string_view text);

/// Like parse_rational, but also accepts exact decimal and scientific
/// notation ("0.25", "1e-4", "2.5E3"). Used for CLI tolerances.
Rational parse_decimal(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

/// Decimal expansion truncated toward zero after `places` digits.
std::string to_decimal(const Rational& q, unsigned places);

inline int sign(const Rational& q) { return sgn(q); }

/// -log10(1 - x) as a double; +inf for x >= 1.
double digits_below_one(const Rational& x);

}  // namespace blackwell
