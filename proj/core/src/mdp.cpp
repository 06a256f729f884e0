#include "blackwell/mdp.hpp"

#include <limits>
#include <set>
#include <stdexcept>

namespace blackwell {

std::size_t Mdp::policy_count() const {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t count = 1;
  for (const auto& acts : states) {
    if (acts.empty()) return 0;
    if (count > kMax / acts.size()) return kMax;
    count *= acts.size();
  }
  return count;
}

std::vector<Diagnostic> validate_mdp(const Mdp& m) {
  std::vector<Diagnostic> out;
  const std::size_t n = m.n();
  if (n == 0) out.push_back({0, 0, "MDP has no states"});
  for (std::size_t s = 0; s < n; ++s) {
    if (m.states[s].empty()) {
      out.push_back({s, 0, "state " + std::to_string(s) + " has no actions"});
      continue;
    }
    for (std::size_t a = 0; a < m.states[s].size(); ++a) {
      const std::string where = " at (" + std::to_string(s) + "," + std::to_string(a) + ")";
      Rational sum;
      std::set<std::size_t> seen;
      for (const auto& t : m.states[s][a].transitions) {
        if (t.to >= n) out.push_back({s, a, "transition target " + std::to_string(t.to) + " out of range" + where});
        if (!seen.insert(t.to).second) {
          out.push_back({s, a, "duplicate transition target " + std::to_string(t.to) + where});
        }
        if (sgn(t.p) < 0 || t.p > 1) {
          out.push_back({s, a, "probability " + to_string(t.p) + " outside [0,1]" + where});
        }
        sum += t.p;
      }
      if (sum != 1) out.push_back({s, a, "row sum " + to_string(sum) + " != 1" + where});
    }
  }
  return out;
}

void require_valid(const Mdp& m) {
  const auto diags = validate_mdp(m);
  if (!diags.empty()) throw std::invalid_argument(diags.front().message);
}

bool is_deterministic(const Mdp& m) {
  for (const auto& acts : m.states) {
    for (const auto& a : acts) {
      std::size_t positive = 0;
      for (const auto& t : a.transitions) {
        if (sgn(t.p) > 0) ++positive;
      }
      if (positive != 1) return false;
    }
  }
  return true;
}

std::size_t successor(const Action& a) {
  for (const auto& t : a.transitions) {
    if (sgn(t.p) > 0) return t.to;
  }
  throw std::invalid_argument("action has no successor");
}

void require_valid_policy(const Mdp& m, const Policy& pi) {
  if (pi.size() != m.n()) {
    throw std::invalid_argument("policy has " + std::to_string(pi.size()) + " entries, MDP has " +
                                std::to_string(m.n()) + " states");
  }
  for (std::size_t s = 0; s < pi.size(); ++s) {
    if (pi[s] >= m.num_actions(s)) {
      throw std::invalid_argument("policy action " + std::to_string(pi[s]) + " invalid at state " +
                                  std::to_string(s));
    }
  }
}

Policy first_action_policy(const Mdp& m) { return Policy(m.n(), 0); }

Policy switch_pair(const StateAction& p, Policy pi) {
  pi.at(p.state) = p.action;
  return pi;
}

PolicyChain transition_matrix(const Mdp& m, const Policy& pi) {
  require_valid_policy(m, pi);
  const std::size_t n = m.n();
  PolicyChain chain{RationalMatrix(n, n), std::vector<Rational>(n)};
  for (std::size_t s = 0; s < n; ++s) {
    const Action& a = m.action(s, pi[s]);
    for (const auto& t : a.transitions) chain.P(s, t.to) += t.p;
    chain.r[s] = a.reward;
  }
  return chain;
}

bool next_policy(const Mdp& m, Policy& pi) {
  for (std::size_t s = m.n(); s-- > 0;) {
    if (++pi[s] < m.num_actions(s)) return true;
    pi[s] = 0;
  }
  return false;
}

}  // namespace blackwell
