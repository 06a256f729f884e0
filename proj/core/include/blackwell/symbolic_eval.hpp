#pragma once

#include <vector>

#include "blackwell/mdp.hpp"
#include "blackwell/ratfun.hpp"

namespace blackwell {

/// Value of a policy as functions of the discount factor g:
/// v_s(g) = numerators[s] / det, where det is a constant multiple of
/// det(I - g P) and every numerator is a polynomial.
struct SymbolicValue {
  Polynomial det;
  std::vector<Polynomial> numerators;

  std::size_t n() const { return numerators.size(); }
  RationalFunction value(std::size_t s) const { return RationalFunction(numerators[s], det); }
  std::vector<RationalFunction> values() const;
  /// Exact values at a point g with det(g) != 0.
  std::vector<Rational> evaluate(const Rational& g) const;
};

/// Solves (I - g P) v = r by fraction-free elimination over Q[g].
SymbolicValue policy_evaluate_symbolic(const Mdp& m, const Policy& pi);

/// Numerator over v.det of q_{s,a} = R(s,a) + g * sum_t T(s,a,t) v_t.
Polynomial q_numerator(const Mdp& m, const SymbolicValue& v, std::size_t s, std::size_t a);

/// Numerator over v.det of q_{s,a} - v_s.
Polynomial advantage_numerator(const Mdp& m, const SymbolicValue& v, std::size_t s, std::size_t a);

RationalFunction q_value(const Mdp& m, const SymbolicValue& v, std::size_t s, std::size_t a);

/// q_{s,a} - v_s.
RationalFunction advantage(const Mdp& m, const SymbolicValue& v, std::size_t s, std::size_t a);

/// q[s][a] for every state and action.
std::vector<std::vector<RationalFunction>> q_values_symbolic(const Mdp& m, const Policy& pi);

struct ImprovingPair {
  StateAction pair;
  RationalFunction gap;
};

/// All (s, a) with q_{s,a} - v_s > 0 near 1, in (state, action) order.
std::vector<ImprovingPair> improving_pairs_with_gaps(const Mdp& m, const Policy& pi, const SymbolicValue& v);
std::vector<ImprovingPair> improving_pairs_with_gaps(const Mdp& m, const Policy& pi);

std::vector<StateAction> improving_pairs(const Mdp& m, const Policy& pi);

/// Componentwise comparison of two value vectors near 1.
/// Returns +1 if a >= b everywhere and > somewhere, -1 for the reverse,
/// 0 if equal everywhere, and 2 if incomparable.
int compare_values(const std::vector<RationalFunction>& a, const std::vector<RationalFunction>& b);

}  // namespace blackwell
