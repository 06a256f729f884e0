#include <doctest.h>

#include "blackwell/detmdp.hpp"
#include "blackwell/instances.hpp"
#include "blackwell/oracle.hpp"
#include "blackwell/policy_iteration.hpp"
#include "blackwell/symbolic_eval.hpp"
#include "oracles.hpp"

using namespace blackwell;

namespace {

RationalFunction mu_max(const std::vector<Polynomial>& ps) {
  RationalFunction best = ps.at(0);
  for (const auto& p : ps) {
    if (mu_compare(RationalFunction(p), best) == MuOrdering::Greater) best = p;
  }
  return best;
}

bool in_set(const std::vector<Policy>& set, const Policy& pi) {
  return std::find(set.begin(), set.end(), pi) != set.end();
}

}  // namespace

TEST_CASE("fig1a") {
  const Mdp m = fig1a();
  CHECK(detmdp2_blackwell(m) == Policy{2, 0, 0});
  const auto paths = phase1_paths(m);
  for (std::size_t s = 0; s < m.n(); ++s) CHECK(paths.d[0][s].is_zero());
  CHECK(paths.d[1][0] == RationalFunction(10));
  CHECK(paths.alpha[1][0] == 2);
  // The 2-edge paths from s1 are 5g, 5 + 5g and 10; the last is largest near 1.
  CHECK(paths.d[2][0] == mu_max(bwtest::all_path_rewards(m, 0, 2)));
  CHECK(paths.d[2][0] == RationalFunction(10));
}

TEST_CASE("single cycle") {
  Mdp m;
  m.states.push_back({Action{"next", {{1, Rational(1)}}, Rational(2)}});
  m.states.push_back({Action{"next", {{2, Rational(1)}}, Rational(-1)}});
  m.states.push_back({Action{"next", {{0, Rational(1)}}, Rational(5)}});
  CHECK(detmdp2_blackwell(m) == Policy{0, 0, 0});
  Mdp one;
  one.states.push_back({Action{"stay", {{0, Rational(1)}}, Rational(1)}});
  CHECK(detmdp2_blackwell(one) == Policy{0});
}

TEST_CASE("fig1b agrees with enumeration") {
  const auto bo = brute_force_bo_set(fig1b());
  CHECK(in_set(bo.bo_set, detmdp2_blackwell(fig1b())));
}

TEST_CASE("stochastic input is rejected") { CHECK_THROWS_AS(detmdp2_blackwell(healthcare(6)), NotDeterministic); }

TEST_CASE("property: path table against path enumeration") {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = static_cast<std::size_t>(bwtest::rand_int(rng, 1, 5));
    const std::size_t k = static_cast<std::size_t>(bwtest::rand_int(rng, 1, 3));
    const Mdp m = random_mdp(n, k, rng(), 1);
    const auto paths = phase1_paths(m);
    for (std::size_t len = 0; len <= std::min<std::size_t>(n, 5); ++len) {
      for (std::size_t s = 0; s < n; ++s) {
        const auto all = bwtest::all_path_rewards(m, s, len);
        CHECK(paths.d[len][s] == mu_max(all));
        Rational best = all[0](Rational(1));
        for (const auto& p : all) best = std::max(best, p(Rational(1)));
        CHECK(paths.d[len][s](Rational(1)) == best);
      }
    }
  }
}

TEST_CASE("property: random DMDPs agree with enumeration and with howard") {
  std::mt19937_64 rng(82);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = static_cast<std::size_t>(bwtest::rand_int(rng, 1, 6));
    const std::size_t k = static_cast<std::size_t>(bwtest::rand_int(rng, 1, 3));
    const Mdp m = random_mdp(n, k, rng(), 1);
    const Policy pi = detmdp2_blackwell(m);
    CHECK(in_set(brute_force_bo_set(m).bo_set, pi));
    const Policy howard = generic_pi(m, first_action_policy(m), SwitchRule::howard()).policy;
    const auto a = policy_evaluate_symbolic(m, pi).values();
    const auto b = policy_evaluate_symbolic(m, howard).values();
    CHECK(compare_values(a, b) == 0);
  }
}
