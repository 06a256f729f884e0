#pragma once

#include <cstdint>
#include <string>

#include "blackwell/mdp.hpp"

namespace blackwell {

/// Three states. s1: a1 -> s2 (reward 0), a2 -> s2 (reward 5), a3 -> s3
/// (reward 10); s2 -> s3 (reward 5); s3 loops with reward 0. The
/// Blackwell-optimal policy is (a3, a1, a1).
Mdp fig1a();

/// Six-state ring. Action 0 moves i -> i+1 with rewards 1,1,0,3,8,7; action 1
/// moves i -> i+2 with rewards 6,8,3,9,8,4 (indices mod 6).
Mdp fig1b();

/// Two states. s1: action 0 -> s2 with reward 1, action 1 loops with reward
/// 1/10; s2 loops with reward 0.
Mdp fig3();

/// n + 7 states ordered u, v, alpha_0..alpha_{n/3+1}, beta_1..beta_{n/3+1},
/// delta_1..delta_{n/3+2}. Only u has two actions; a1 beats a0 exactly for
/// discount factors above 1 - 1/(eps 2^{n/3}).
/// Requires n divisible by 3, n >= 3 and 0 < eps < 1/2.
Mdp lower_bound(std::size_t n, const Rational& eps);

/// n states: s_1..s_{n-1} (indices 0..n-2) with actions low / medium / high
/// (rewards 10, 8, 6) and an absorbing state m (index n-1, reward 0).
/// Requires n >= 4.
Mdp healthcare(std::size_t n);

/// Seeded random MDP: k actions per state; each action has 1..branching
/// distinct successors with probabilities proportional to integer weights
/// in 1..4, and an integer reward in [-10, 10].
Mdp random_mdp(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t branching);

struct InstanceSpec {
  enum class Family { Fig1a, Fig1b, Fig3, LowerBound, Healthcare, Random };
  Family family = Family::Fig1a;
  std::size_t n = 0;
  Rational epsilon{1, 3};
  std::size_t k = 2;
  std::uint64_t seed = 0;
  std::size_t branching = 2;
};

/// Throws std::invalid_argument for parameters outside a family's domain.
Mdp generate(const InstanceSpec& spec);

/// "fig1a", "fig1b", "fig3", "lower-bound", "healthcare", "random".
InstanceSpec::Family parse_family(const std::string& name);

}  // namespace blackwell
