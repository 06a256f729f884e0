#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "blackwell/linalg.hpp"
#include "blackwell/rational.hpp"

namespace blackwell {

struct Transition {
  std::size_t to = 0;
  Rational p;
};

struct Action {
  std::string label;
  std::vector<Transition> transitions;
  Rational reward;
};

/// Finite MDP. Actions are 0-based indices per state; action sets may differ
/// in size between states.
struct Mdp {
  std::vector<std::vector<Action>> states;

  std::size_t n() const { return states.size(); }
  std::size_t num_actions(std::size_t s) const { return states[s].size(); }
  const Action& action(std::size_t s, std::size_t a) const { return states[s][a]; }
  /// Product of the per-state action counts, saturating at SIZE_MAX.
  std::size_t policy_count() const;
};

/// One action index per state.
using Policy = std::vector<std::size_t>;

struct StateAction {
  std::size_t state = 0;
  std::size_t action = 0;
  friend auto operator<=>(const StateAction&, const StateAction&) = default;
};

struct Diagnostic {
  std::size_t state = 0;
  std::size_t action = 0;
  std::string message;
};

/// Empty when m is valid: at least one state, every state has an action,
/// transition targets are in range and distinct, probabilities lie in [0, 1]
/// and each row sums to exactly 1.
std::vector<Diagnostic> validate_mdp(const Mdp& m);

/// Throws std::invalid_argument with the first diagnostic.
void require_valid(const Mdp& m);

/// True iff every action has exactly one successor with positive probability.
bool is_deterministic(const Mdp& m);

/// Successor of a deterministic action.
std::size_t successor(const Action& a);

/// Throws std::invalid_argument unless pi selects a valid action everywhere.
void require_valid_policy(const Mdp& m, const Policy& pi);

/// Policy choosing action 0 in every state.
Policy first_action_policy(const Mdp& m);

/// pi with pi(s) replaced by a.
Policy switch_pair(const StateAction& p, Policy pi);

struct PolicyChain {
  RationalMatrix P;
  std::vector<Rational> r;
};

/// P(s, s') = T(s, pi(s), s') and r(s) = R(s, pi(s)).
PolicyChain transition_matrix(const Mdp& m, const Policy& pi);

/// Iterates all policies in lexicographic order (last state fastest).
/// Returns false after the last one.
bool next_policy(const Mdp& m, Policy& pi);

}  // namespace blackwell
