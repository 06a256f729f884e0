#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "blackwell/symbolic_eval.hpp"

namespace blackwell {

struct SwitchRule {
  enum class Kind { Howard, MaxGain, BatchSwitching, RandomizedSimple };
  Kind kind = Kind::Howard;
  std::size_t batch_size = 2;
  std::uint64_t seed = 0;

  static SwitchRule howard() { return {Kind::Howard}; }
  static SwitchRule max_gain() { return {Kind::MaxGain}; }
  static SwitchRule batch_switching(std::size_t batch_size = 2) { return {Kind::BatchSwitching, batch_size}; }
  static SwitchRule randomized_simple(std::uint64_t seed = 0) { return {Kind::RandomizedSimple, 2, seed}; }
};

struct PiStep {
  Policy policy;
  /// Pairs switched to reach this policy; empty for the initial policy.
  std::vector<StateAction> switched;
};

struct PiTrace {
  std::vector<PiStep> steps;
  std::size_t iterations() const { return steps.empty() ? 0 : steps.size() - 1; }
};

struct PiResult {
  Policy policy;
  PiTrace trace;
};

/// Policy iteration under the ordering near 1: evaluate symbolically, switch
/// the pairs chosen by `rule`, stop when no pair improves.
PiResult generic_pi(const Mdp& m, const Policy& pi0, const SwitchRule& rule);

// Selection rules. J is the improving set in (state, action) order; ties go
// to the lowest state, then the lowest action.

/// Per improvable state, the action with the largest gap.
std::vector<StateAction> select_howard(const std::vector<ImprovingPair>& J);

/// The single pair with the largest gap.
std::vector<StateAction> select_max_gain(const std::vector<ImprovingPair>& J);

/// Howard restricted to the highest batch [b * size, (b + 1) * size) holding
/// an improvable state.
std::vector<StateAction> select_batch_switching(const std::vector<ImprovingPair>& J, std::size_t batch_size);

/// One pair drawn uniformly among those at the highest improvable state.
std::vector<StateAction> select_randomized_simple(const std::vector<ImprovingPair>& J, std::mt19937_64& rng);

}  // namespace blackwell
