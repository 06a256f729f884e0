#pragma once

#include <cstdint>
#include <vector>

#include "blackwell/mdp.hpp"

namespace blackwell {

/// Sorted set of state-action pairs.
using PairSet = std::vector<StateAction>;

/// Every pair of m.
PairSet full_pair_set(const Mdp& m);

struct FacetOptions {
  std::uint64_t seed = 0;
  /// Re-verifies the recursion invariants at every call and return.
  bool check_invariants = false;
  bool record_transcript = false;
};

struct FacetEvent {
  enum class Kind { Pick, Switch, Return };
  Kind kind;
  std::size_t depth;
  StateAction pair;
  Policy policy;
};

struct FacetResult {
  Policy policy;
  std::size_t switches = 0;
  std::vector<FacetEvent> transcript;
};

/// Random-Facet over the pairs in M, starting from pi. Returns a policy with
/// no improving pair in M; when M holds every pair the result is
/// Blackwell-optimal.
///
/// Randomness: each call has a 64-bit key. The pick uses an mt19937_64
/// seeded with mix(key, 0); the first recursive call gets mix(key, 1) and
/// the second mix(key, 2). The root key is the seed.
///
/// Throws std::invalid_argument if pi does not lie in M or a state has no
/// pair in M.
FacetResult random_facet_blackwell(const Mdp& m, const PairSet& M, const Policy& pi, const FacetOptions& options = {});

FacetResult random_facet_blackwell(const Mdp& m, const Policy& pi, const FacetOptions& options = {});

}  // namespace blackwell
