#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "blackwell/roots.hpp"
#include "blackwell/symbolic_eval.hpp"

namespace blackwell {

/// The policy count exceeds the enumeration budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBudget = 1000000;

struct BoResult {
  /// Every policy whose value is >= every other policy's at every state
  /// near 1, in lexicographic order.
  std::vector<Policy> bo_set;
  /// Value of the members (they coincide).
  std::vector<RationalFunction> values;
  bool certified = true;
};

/// Enumerates all policies. Throws BudgetExceeded beyond `budget` policies.
BoResult brute_force_bo_set(const Mdp& m, std::size_t budget = kDefaultBudget);

/// Certified interval [lo, hi] around a threshold discount factor; lo = hi = 0
/// when there is no threshold in (0, 1).
struct ThresholdInterval {
  Rational lo;
  Rational hi;
  /// The pair (deviation mode) whose gap changes sign at the threshold.
  std::optional<StateAction> witness;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
  /// -log10(1 - lo) and -log10(1 - hi).
  double u_lo() const { return digits_below_one(lo); }
  double u_hi() const { return digits_below_one(hi); }
};

/// Largest sign-changing root in [0, 1) of q_{s,a} - v_s over all pairs, for
/// a policy pi (meant to be Blackwell-optimal). Above it pi stays optimal.
ThresholdInterval deviation_threshold(const Mdp& m, const Policy& pi, const Precision& precision = {});

struct GammaBwResult {
  ThresholdInterval interval;
  std::vector<Policy> bo_set;
  std::size_t candidate_polynomials = 0;
  std::size_t candidate_roots = 0;
};

/// Smallest g such that the set of g'-discount-optimal policies equals the
/// Blackwell-optimal set for every g' in (g, 1). Candidates are the
/// sign-changing roots of all pairwise value differences; each is tested
/// at an exact rational point just below it, from the top down.
GammaBwResult gamma_bw_exact(const Mdp& m, const Precision& precision = {}, std::size_t budget = kDefaultBudget);

}  // namespace blackwell
