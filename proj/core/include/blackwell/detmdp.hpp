#pragma once

#include <stdexcept>
#include <vector>

#include "blackwell/mdp.hpp"
#include "blackwell/ratfun.hpp"

namespace blackwell {

/// Precondition failure: the solver needs a deterministic MDP.
struct NotDeterministic : std::invalid_argument {
  NotDeterministic() : std::invalid_argument("requires DMDP: every action must have a single successor") {}
};

/// d[i][s]: largest discounted reward of an i-edge path from s (i = 0..n).
/// alpha[i][s]: first action of such a path (alpha[0] is unused).
struct PathTable {
  std::vector<std::vector<RationalFunction>> d;
  std::vector<std::vector<std::size_t>> alpha;
};

/// y[j][s] for j = 0..n-1 and the actions a[j][s] attaining them, where
/// a[0] = alpha[n]. best_index[s] is the j maximising y[j][s].
struct YTable {
  std::vector<std::vector<RationalFunction>> y;
  std::vector<std::vector<std::size_t>> a;
  std::vector<std::size_t> best_index;
};

PathTable phase1_paths(const Mdp& m);

struct Phase2Result {
  YTable table;
  Policy policy;
};

Phase2Result phase2_collect(const Mdp& m, const PathTable& paths);

/// Two-phase Bellman-Ford for deterministic MDPs, with all comparisons made
/// near 1. Throws NotDeterministic.
Policy detmdp2_blackwell(const Mdp& m);

}  // namespace blackwell
