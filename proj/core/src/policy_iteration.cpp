#include "blackwell/policy_iteration.hpp"

#include <set>
#include <stdexcept>

#include "blackwell/rng.hpp"

namespace blackwell {

std::vector<StateAction> select_howard(const std::vector<ImprovingPair>& J) {
  std::vector<StateAction> out;
  const RationalFunction* best = nullptr;
  for (const auto& ip : J) {
    if (out.empty() || out.back().state != ip.pair.state) {
      out.push_back(ip.pair);
      best = &ip.gap;
    } else if (mu_compare(ip.gap, *best) == MuOrdering::Greater) {
      out.back() = ip.pair;
      best = &ip.gap;
    }
  }
  return out;
}

std::vector<StateAction> select_max_gain(const std::vector<ImprovingPair>& J) {
  if (J.empty()) return {};
  const ImprovingPair* best = &J.front();
  for (const auto& ip : J) {
    if (mu_compare(ip.gap, best->gap) == MuOrdering::Greater) best = &ip;
  }
  return {best->pair};
}

std::vector<StateAction> select_batch_switching(const std::vector<ImprovingPair>& J, std::size_t batch_size) {
  if (batch_size == 0) throw std::invalid_argument("batch size must be positive");
  if (J.empty()) return {};
  const std::size_t batch = J.back().pair.state / batch_size;
  std::vector<ImprovingPair> in_batch;
  for (const auto& ip : J) {
    if (ip.pair.state / batch_size == batch) in_batch.push_back(ip);
  }
  return select_howard(in_batch);
}

std::vector<StateAction> select_randomized_simple(const std::vector<ImprovingPair>& J, std::mt19937_64& rng) {
  if (J.empty()) return {};
  const std::size_t top = J.back().pair.state;
  std::vector<StateAction> candidates;
  for (const auto& ip : J) {
    if (ip.pair.state == top) candidates.push_back(ip.pair);
  }
  return {candidates[uniform_index(rng, candidates.size())]};
}

PiResult generic_pi(const Mdp& m, const Policy& pi0, const SwitchRule& rule) {
  require_valid_policy(m, pi0);
  std::mt19937_64 rng(rule.seed);
  PiResult result{pi0, {}};
  result.trace.steps.push_back({pi0, {}});
  std::set<Policy> visited{pi0};
  for (;;) {
    const auto J = improving_pairs_with_gaps(m, result.policy);
    if (J.empty()) break;
    std::vector<StateAction> theta;
    switch (rule.kind) {
      case SwitchRule::Kind::Howard: theta = select_howard(J); break;
      case SwitchRule::Kind::MaxGain: theta = select_max_gain(J); break;
      case SwitchRule::Kind::BatchSwitching: theta = select_batch_switching(J, rule.batch_size); break;
      case SwitchRule::Kind::RandomizedSimple: theta = select_randomized_simple(J, rng); break;
    }
    for (const auto& p : theta) result.policy[p.state] = p.action;
    if (!visited.insert(result.policy).second) throw std::logic_error("policy iteration revisited a policy");
    result.trace.steps.push_back({result.policy, std::move(theta)});
  }
  return result;
}

}  // namespace blackwell
