#include "blackwell/detmdp.hpp"

namespace blackwell {
namespace {

// r(s,a) + g * next[succ(s,a)], maximised over a; ties keep the lowest a.
void bellman_max(const Mdp& m, std::size_t s, const std::vector<RationalFunction>& next, RationalFunction& best,
                 std::size_t& arg) {
  const RationalFunction g(Polynomial::monomial(1, 1));
  for (std::size_t a = 0; a < m.num_actions(s); ++a) {
    const Action& act = m.action(s, a);
    RationalFunction cand = RationalFunction(act.reward) + g * next[successor(act)];
    if (a == 0 || mu_compare(cand, best) == MuOrdering::Greater) {
      best = std::move(cand);
      arg = a;
    }
  }
}

}  // namespace

PathTable phase1_paths(const Mdp& m) {
  if (!is_deterministic(m)) throw NotDeterministic();
  const std::size_t n = m.n();
  PathTable t;
  t.d.assign(n + 1, std::vector<RationalFunction>(n));
  t.alpha.assign(n + 1, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t s = 0; s < n; ++s) bellman_max(m, s, t.d[i - 1], t.d[i][s], t.alpha[i][s]);
  }
  return t;
}

Phase2Result phase2_collect(const Mdp& m, const PathTable& paths) {
  const std::size_t n = m.n();
  const Polynomial one = Polynomial::constant(1);
  YTable t;
  t.y.assign(n, std::vector<RationalFunction>(n));
  t.a.assign(n, std::vector<std::size_t>(n, 0));
  t.best_index.assign(n, 0);

  // y0(s) = min over i < n of (d_n - g^(n-i) d_i) / (1 - g^(n-i)).
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const Polynomial gk = Polynomial::monomial(1, n - i);
      RationalFunction ratio =
          (paths.d[n][s] - RationalFunction(gk) * paths.d[i][s]) / RationalFunction(one - gk);
      if (i == 0 || mu_compare(ratio, t.y[0][s]) == MuOrdering::Less) t.y[0][s] = std::move(ratio);
    }
    t.a[0][s] = paths.alpha[n][s];
  }
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t s = 0; s < n; ++s) bellman_max(m, s, t.y[j - 1], t.y[j][s], t.a[j][s]);
  }

  Policy pi(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (mu_compare(t.y[j][s], t.y[best][s]) == MuOrdering::Greater) best = j;
    }
    t.best_index[s] = best;
    pi[s] = t.a[best][s];
  }
  return {std::move(t), std::move(pi)};
}

Policy detmdp2_blackwell(const Mdp& m) {
  require_valid(m);
  return phase2_collect(m, phase1_paths(m)).policy;
}

}  // namespace blackwell
