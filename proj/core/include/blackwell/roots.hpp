#pragma once

#include <optional>
#include <vector>

#include "blackwell/polynomial.hpp"

namespace blackwell {

/// Isolating interval for a real root. Either lo == hi (the root is exactly
/// lo), or lo < hi, the root lies in the open interval (lo, hi), and the
/// isolated polynomial is nonzero at both endpoints.
struct RootInterval {
  Rational lo;
  Rational hi;
  /// True when the polynomial changes sign across the root (odd multiplicity).
  bool sign_change = false;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Target precision. Refinement stops once hi - lo <= width and, if set,
/// the interval spans at most log_width in u = -log10(1 - x). The log
/// criterion bisects in u, which reaches roots very close to 1 quickly.
struct Precision {
  Rational width{1, 1000000};
  std::optional<double> log_width;
};

/// Sturm sequence p, p', -rem(...), ... with positive rescaling.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of sign variations of the sequence at x, zeros skipped.
int sign_variations(const std::vector<Polynomial>& sturm, const Rational& x);

/// Number of distinct roots of p in (a, b], for p squarefree with p(a) != 0.
int count_roots(const std::vector<Polynomial>& sturm, const Rational& a, const Rational& b);

/// All distinct real roots of p in [a, b), ascending. Non-exact intervals
/// contain one root each and are narrowed to `precision`.
/// Precondition: p is not the zero polynomial, a < b.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b,
                                        const Precision& precision = {});

/// Largest real root of p in [0, 1), or nullopt if there is none.
std::optional<RootInterval> largest_root_below_one(const Polynomial& p, const Precision& precision = {});

/// Largest root in [0, 1) across which p changes sign, or nullopt.
std::optional<RootInterval> largest_sign_changing_root_below_one(const Polynomial& p,
                                                                 const Precision& precision = {});

/// Narrows a non-exact interval of a squarefree polynomial p whose only root
/// inside is simple. May collapse the interval onto an exact rational root.
void refine(RootInterval& interval, const Polynomial& p, const Precision& precision);

/// Bisects once (see refine).
void bisect(RootInterval& interval, const Polynomial& p, bool log_scale = false);

}  // namespace blackwell
