#include <doctest.h>

#include "blackwell/instances.hpp"
#include "blackwell/io.hpp"
#include "blackwell/oracle.hpp"
#include "blackwell/policy_iteration.hpp"
#include "blackwell/symbolic_eval.hpp"
#include "oracles.hpp"

using namespace blackwell;

namespace {

Rational lower_bound_threshold(std::size_t n, const Rational& eps) {
  return 1 - 1 / (eps * Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(n / 3)));
}

Mdp one_state() {
  Mdp m;
  m.states.push_back({Action{"stay", {{0, Rational(1)}}, Rational(1)}});
  return m;
}

Policy bo_policy(const Mdp& m) { return generic_pi(m, first_action_policy(m), SwitchRule::howard()).policy; }

}  // namespace

TEST_CASE("generators") {
  const Mdp a = fig1a();
  CHECK(a.n() == 3);
  CHECK(policy_evaluate_symbolic(a, {2, 0, 0}).value(0) == RationalFunction(10));
  CHECK(lower_bound(12, Rational(1, 3)).n() == 19);
  CHECK(fig1b().n() == 6);
  CHECK(fig3().n() == 2);

  const Mdp h = healthcare(15);
  CHECK(h.n() == 15);
  const Action& medium = h.action(2, 1);
  CHECK(medium.label == "medium");
  REQUIRE(medium.transitions.size() == 3);
  CHECK(medium.transitions[0].to == 1);
  CHECK(medium.transitions[0].p == Rational(2, 5));
  CHECK(medium.transitions[1].p == Rational(2, 5));
  CHECK(medium.transitions[2].p == Rational(1, 5));
  CHECK(h.action(14, 0).reward == 0);

  for (const Mdp& m : {a, fig1b(), fig3(), h, healthcare(4), lower_bound(3, Rational(1, 4)), lower_bound(15, Rational(1, 3))}) {
    CHECK(validate_mdp(m).empty());
  }
  CHECK_THROWS_AS(lower_bound(7, Rational(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound(6, Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound(6, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(healthcare(3), std::invalid_argument);
  CHECK_THROWS_AS(random_mdp(3, 2, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("fig2"), std::invalid_argument);
}

TEST_CASE("random generator") {
  const Mdp one = random_mdp(1, 1, 5, 1);
  REQUIRE(one.n() == 1);
  REQUIRE(one.action(0, 0).transitions.size() == 1);
  CHECK(one.action(0, 0).transitions[0].to == 0);
  CHECK(format_mdp(random_mdp(5, 3, 42, 3)) == format_mdp(random_mdp(5, 3, 42, 3)));
  CHECK(format_mdp(random_mdp(5, 3, 42, 3)) != format_mdp(random_mdp(5, 3, 43, 3)));
  const Mdp m = random_mdp(4, 3, 7, 2);
  CHECK(validate_mdp(m).empty());
  CHECK_FALSE(brute_force_bo_set(m).bo_set.empty());
  for (std::size_t s = 0; s < m.n(); ++s) {
    for (std::size_t a = 0; a < m.num_actions(s); ++a) {
      CHECK(m.action(s, a).transitions.size() <= 2);
      CHECK(abs(m.action(s, a).reward) <= 10);
      CHECK(m.action(s, a).reward.get_den() == 1);
    }
  }
}

TEST_CASE("brute-force BO sets") {
  CHECK(brute_force_bo_set(fig1a()).bo_set == std::vector<Policy>{{2, 0, 0}});
  CHECK(brute_force_bo_set(one_state()).bo_set == std::vector<Policy>{{0}});
  CHECK(brute_force_bo_set(fig3()).bo_set == std::vector<Policy>{{1, 0}});
  const auto r = brute_force_bo_set(fig1b());
  CHECK(r.certified);
  REQUIRE(r.bo_set.size() == 1);
  CHECK_THROWS_AS(brute_force_bo_set(healthcare(15)), BudgetExceeded);
  CHECK_THROWS_AS(brute_force_bo_set(fig1b(), 63), BudgetExceeded);
}

TEST_CASE("brute-force members dominate every policy") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 20; ++i) {
    const Mdp m = random_mdp(3, 2, rng(), 2);
    const auto bo = brute_force_bo_set(m);
    REQUIRE_FALSE(bo.bo_set.empty());
    const auto best = bwtest::cramer_values(m, bo.bo_set[0]);
    Policy pi = first_action_policy(m);
    do {
      const auto v = bwtest::cramer_values(m, pi);
      bool all_equal = true;
      for (std::size_t s = 0; s < m.n(); ++s) {
        CHECK(mu_compare(best[s], v[s]) != MuOrdering::Less);
        all_equal = all_equal && best[s] == v[s];
      }
      const bool member = std::find(bo.bo_set.begin(), bo.bo_set.end(), pi) != bo.bo_set.end();
      CHECK(member == all_equal);
    } while (next_policy(m, pi));
  }
}

TEST_CASE("deviation threshold examples") {
  const auto f3 = deviation_threshold(fig3(), {1, 0});
  CHECK(f3.contains(Rational(9, 10)));
  CHECK(f3.width() <= Rational(1, 1000000));
  REQUIRE(f3.witness.has_value());
  CHECK(*f3.witness == StateAction{0, 0});
  const auto single = deviation_threshold(one_state(), {0});
  CHECK(single.lo == 0);
  CHECK(single.hi == 0);
  CHECK_FALSE(single.witness.has_value());
}

TEST_CASE("lower-bound family follows the closed form") {
  const Rational eps(1, 3);
  Rational previous = 0;
  for (std::size_t n : {6, 9, 12, 15}) {
    const Mdp m = lower_bound(n, eps);
    const Policy pi = bo_policy(m);
    CHECK(pi[0] == 1);
    const Rational expected = lower_bound_threshold(n, eps);
    const auto iv = deviation_threshold(m, pi);
    CHECK(iv.contains(expected));
    CHECK(expected > previous);
    previous = expected;
  }
  const Mdp m = lower_bound(12, eps);
  Policy pi0 = bo_policy(m);
  pi0[0] = 0;
  const auto v = policy_evaluate_symbolic(m, pi0);
  const auto gap = advantage(m, v, 0, 1);
  CHECK(sign_near_one(gap) == 1);
  CHECK(gap(lower_bound_threshold(12, eps)) == 0);
  const auto root = largest_sign_changing_root_below_one(advantage_numerator(m, v, 0, 1));
  REQUIRE(root.has_value());
  CHECK(root->contains(Rational(13, 16)));
}

TEST_CASE("exact threshold examples") {
  Precision prec;
  prec.width = Rational(1, 10000);
  const auto b = gamma_bw_exact(fig1b(), prec);
  CHECK(b.interval.contains(parse_decimal("0.8541")));
  CHECK(b.interval.lo <= parse_decimal("0.85415"));
  CHECK(b.interval.hi >= parse_decimal("0.85405"));
  CHECK(b.interval.width() <= Rational(1, 10000));
  // Hand enumeration of fig1a: 10 > 5 + 5g > 5g on [0, 1), so the optimal set never changes.
  const auto a = gamma_bw_exact(fig1a());
  CHECK(a.interval.lo == 0);
  CHECK(a.interval.hi == 0);
  const auto one = gamma_bw_exact(one_state());
  CHECK(one.interval.hi == 0);
  const auto f3 = gamma_bw_exact(fig3());
  CHECK(f3.interval.contains(Rational(9, 10)));
}

TEST_CASE("exact and deviation thresholds are consistent") {
  for (const Mdp& m : {fig1b(), fig3()}) {
    const auto bo = brute_force_bo_set(m);
    REQUIRE(bo.bo_set.size() == 1);
    const auto dev = deviation_threshold(m, bo.bo_set[0]);
    const auto ex = gamma_bw_exact(m);
    CHECK(ex.interval.lo <= dev.hi);
    CHECK(dev.lo <= ex.interval.hi);
  }
  std::mt19937_64 rng(102);
  for (int i = 0; i < 25; ++i) {
    const Mdp m = random_mdp(3, 2, rng(), 2);
    const auto bo = brute_force_bo_set(m);
    if (bo.bo_set.size() != 1) continue;
    const auto dev = deviation_threshold(m, bo.bo_set[0]);
    const auto ex = gamma_bw_exact(m);
    CHECK(ex.interval.hi >= dev.lo);
  }
}
