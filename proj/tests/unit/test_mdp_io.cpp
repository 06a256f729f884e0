#include <doctest.h>

#include "blackwell/instances.hpp"
#include "blackwell/io.hpp"
#include "blackwell/mdp.hpp"

using namespace blackwell;

namespace {
Mdp one_state() {
  Mdp m;
  m.states.push_back({Action{"stay", {{0, Rational(1)}}, Rational(1)}});
  return m;
}
}  // namespace

TEST_CASE("validation") {
  CHECK(validate_mdp(fig1a()).empty());
  CHECK(validate_mdp(one_state()).empty());
  Mdp m;
  m.states.push_back({Action{"a", {{0, Rational(9, 10)}}, Rational(0)}});
  auto d = validate_mdp(m);
  REQUIRE(d.size() == 1);
  CHECK(d[0].message.find("row sum") != std::string::npos);
  m.states[0][0].transitions = {{0, Rational(-1, 2)}, {0, Rational(3, 2)}};
  CHECK_FALSE(validate_mdp(m).empty());
  m.states[0][0].transitions = {{1, Rational(1)}};
  CHECK_FALSE(validate_mdp(m).empty());
  CHECK_FALSE(validate_mdp(Mdp{}).empty());
  CHECK_THROWS_AS(require_valid(m), std::invalid_argument);
}

TEST_CASE("determinism") {
  CHECK(is_deterministic(fig1a()));
  CHECK(is_deterministic(one_state()));
  CHECK_FALSE(is_deterministic(healthcare(15)));
}

TEST_CASE("transition matrices") {
  const auto c = transition_matrix(fig1a(), {2, 0, 0});
  CHECK(c.P(0, 2) == 1);
  CHECK(c.P(0, 1) == 0);
  CHECK(c.r[0] == 10);
  const auto one = transition_matrix(one_state(), {0});
  CHECK(one.P == RationalMatrix::identity(1));
  const auto f3 = transition_matrix(fig3(), {1, 0});
  CHECK(f3.P(0, 0) == 1);
  CHECK(f3.r[0] == Rational(1, 10));
  const Mdp h = healthcare(8);
  Policy pi(h.n(), 0);
  do {
    const auto t = transition_matrix(h, pi);
    for (std::size_t s = 0; s < h.n(); ++s) {
      Rational sum = 0;
      for (std::size_t j = 0; j < h.n(); ++j) sum += t.P(s, j);
      CHECK(sum == 1);
    }
  } while (next_policy(h, pi));
}

TEST_CASE("policies") {
  const Mdp m = fig1a();
  CHECK(switch_pair({0, 2}, {0, 0, 0}) == Policy{2, 0, 0});
  CHECK(switch_pair({1, 0}, {2, 0, 0}) == Policy{2, 0, 0});
  CHECK(switch_pair({1, 1}, switch_pair({0, 2}, {0, 0, 0})) == switch_pair({0, 2}, switch_pair({1, 1}, {0, 0, 0})));
  CHECK_THROWS_AS(require_valid_policy(m, {3, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(require_valid_policy(m, {0, 0}), std::invalid_argument);
  Policy pi = first_action_policy(m);
  std::size_t count = 1;
  while (next_policy(m, pi)) ++count;
  CHECK(count == m.policy_count());
  CHECK(count == 3);
}

TEST_CASE("JSON round trip") {
  for (const Mdp& m : {fig1a(), fig1b(), fig3(), healthcare(6), lower_bound(6, Rational(1, 3)), random_mdp(4, 3, 7, 3)}) {
    const std::string text = format_mdp(m);
    const Mdp back = parse_mdp(text);
    CHECK(format_mdp(back) == text);
    REQUIRE(back.n() == m.n());
    for (std::size_t s = 0; s < m.n(); ++s) {
      REQUIRE(back.num_actions(s) == m.num_actions(s));
      for (std::size_t a = 0; a < m.num_actions(s); ++a) {
        CHECK(back.action(s, a).reward == m.action(s, a).reward);
        CHECK(back.action(s, a).label == m.action(s, a).label);
        REQUIRE(back.action(s, a).transitions.size() == m.action(s, a).transitions.size());
        for (std::size_t t = 0; t < m.action(s, a).transitions.size(); ++t) {
          CHECK(back.action(s, a).transitions[t].to == m.action(s, a).transitions[t].to);
          CHECK(back.action(s, a).transitions[t].p == m.action(s, a).transitions[t].p);
        }
      }
    }
  }
}

TEST_CASE("JSON parsing") {
  const Mdp m = parse_mdp(R"({"states": [{"actions": [{"transitions": [{"to": 0, "p": "1/2"}, {"to": 1, "p": "1/2"}],
    "rewards": [{"to": 0, "r": 1}, {"to": 1, "r": "3"}]}]}, {"actions": [{"transitions": [{"to": 1, "p": 1}], "reward": 0}]}]})");
  CHECK(m.n() == 2);
  CHECK(m.action(0, 0).reward == 2);
  CHECK_THROWS_AS(parse_mdp("{"), FormatError);
  CHECK_THROWS_AS(parse_mdp(R"({"states": [{"actions": [{"transitions": [{"to": 0, "p": 0.5}], "reward": 0}]}]})"),
                  FormatError);
  CHECK_THROWS_AS(parse_mdp(R"({"n": 2, "states": [{"actions": [{"transitions": [{"to": 0, "p": 1}], "reward": 0}]}]})"),
                  FormatError);
  CHECK(parse_policy("[2,0,0]") == Policy{2, 0, 0});
  CHECK(parse_policy(R"({"policy": [1, 0]})") == Policy{1, 0});
  CHECK(parse_policy(format_policy({3, 1})) == Policy{3, 1});
  CHECK_THROWS_AS(parse_policy("[-1]"), FormatError);
  const RationalFunction r(Polynomial{Rational(1, 10)}, Polynomial{1, -2});
  CHECK(parse_ratfun(format_ratfun(r)) == r);
}
