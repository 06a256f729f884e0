#include "blackwell/instances.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

#include "blackwell/rng.hpp"

namespace blackwell {
namespace {

Action det_action(std::string label, std::size_t to, const Rational& reward) {
  return {std::move(label), {{to, Rational(1)}}, reward};
}

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Mdp fig1a() {
  Mdp m;
  m.states = {
      {det_action("solid", 1, q(0)), det_action("dashed", 1, q(5)), det_action("dotted", 2, q(10))},
      {det_action("solid", 2, q(5))},
      {det_action("solid", 2, q(0))},
  };
  return m;
}

Mdp fig1b() {
  const long solid[] = {1, 1, 0, 3, 8, 7};
  const long dashed[] = {6, 8, 3, 9, 8, 4};
  Mdp m;
  for (std::size_t i = 0; i < 6; ++i) {
    m.states.push_back({det_action("solid", (i + 1) % 6, q(solid[i])), det_action("dashed", (i + 2) % 6, q(dashed[i]))});
  }
  return m;
}

Mdp fig3() {
  Mdp m;
  m.states = {
      {det_action("solid", 1, q(1)), det_action("dashed", 0, q(1, 10))},
      {det_action("solid", 1, q(0))},
  };
  return m;
}

Mdp lower_bound(std::size_t n, const Rational& eps) {
  if (n == 0 || n % 3 != 0) throw std::invalid_argument("lower_bound: n must be a positive multiple of 3");
  if (!(sgn(eps) > 0 && eps < Rational(1, 2))) throw std::invalid_argument("lower_bound: need 0 < eps < 1/2");
  const std::size_t h = n / 3;
  const std::size_t u = 0;
  const std::size_t v = 1;
  auto alpha = [&](std::size_t i) { return 2 + i; };          // 0..h+1
  auto beta = [&](std::size_t i) { return 2 + (h + 2) + (i - 1); };  // 1..h+1
  auto delta = [&](std::size_t i) { return 2 + (h + 2) + (h + 1) + (i - 1); };  // 1..h+2
  Mdp m;
  m.states.resize(n + 7);

  m.states[u] = {
      {"a0", {{alpha(0), 1 - eps}, {alpha(1), eps}}, q(0)},
      {"a1", {{beta(1), q(1, 2)}, {v, q(1, 2) - eps}, {delta(1), eps}}, q(0)},
  };
  m.states[v] = {det_action("a0", v, q(0))};

  m.states[alpha(0)] = {det_action("a0", alpha(0), q(0))};
  for (std::size_t i = 1; i <= h; ++i) m.states[alpha(i)] = {det_action("a0", alpha(i + 1), q(i == h ? 1 : 0))};
  m.states[alpha(h + 1)] = {det_action("a0", alpha(h + 1), q(0))};

  for (std::size_t i = 1; i < h; ++i) {
    m.states[beta(i)] = {{"a0", {{beta(i + 1), q(1, 2)}, {v, q(1, 2)}}, q(0)}};
  }
  m.states[beta(h)] = {det_action("a0", beta(h + 1), q(1))};
  m.states[beta(h + 1)] = {det_action("a0", beta(h + 1), q(0))};

  for (std::size_t i = 1; i <= h + 1; ++i) m.states[delta(i)] = {det_action("a0", delta(i + 1), q(i == h + 1 ? 1 : 0))};
  m.states[delta(h + 2)] = {det_action("a0", delta(h + 2), q(0))};
  return m;
}

Mdp healthcare(std::size_t n) {
  if (n < 4) throw std::invalid_argument("healthcare: n must be at least 4");
  struct Treatment {
    const char* label;
    long reward;
    long t[7];  // tenths
  };
  const Treatment treatments[] = {
      {"low", 10, {7, 3, 3, 4, 3, 3, 3}},
      {"medium", 8, {8, 2, 4, 4, 2, 4, 2}},
      {"high", 6, {9, 1, 5, 4, 1, 5, 1}},
  };
  const std::size_t m_state = n - 1;
  const std::size_t last = n - 2;  // s_{n-1}
  Mdp m;
  m.states.resize(n);
  for (std::size_t s = 0; s < n - 1; ++s) {
    for (const auto& tr : treatments) {
      auto t = [&](int i) { return q(tr.t[i - 1], 10); };
      std::vector<Transition> row;
      if (s == 0) {
        row = {{0, t(1)}, {1, t(2)}};
      } else if (s == 1) {
        row = {{0, t(3)}, {1, t(4)}, {2, t(5)}};
      } else if (s < last) {
        row = {{s - 1, t(6)}, {s, t(4)}, {s + 1, t(5)}};
      } else {
        row = {{s - 1, t(6)}, {s, t(4)}, {m_state, t(7)}};
      }
      m.states[s].push_back({tr.label, std::move(row), q(tr.reward)});
    }
  }
  m.states[m_state] = {det_action("absorb", m_state, q(0))};
  return m;
}

Mdp random_mdp(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t branching) {
  if (n == 0 || k == 0) throw std::invalid_argument("random_mdp: n and k must be positive");
  if (branching == 0 || branching > n) throw std::invalid_argument("random_mdp: need 1 <= branching <= n");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(n);
  Mdp m;
  m.states.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < k; ++a) {
      const std::size_t b = 1 + uniform_index(rng, branching);
      std::iota(order.begin(), order.end(), std::size_t{0});
      // Partial Fisher-Yates: the first b entries are distinct successors.
      for (std::size_t i = 0; i < b; ++i) std::swap(order[i], order[i + uniform_index(rng, n - i)]);
      std::vector<long> weights(b);
      long total = 0;
      for (auto& w : weights) total += (w = 1 + static_cast<long>(uniform_index(rng, 4)));
      std::vector<Transition> row;
      for (std::size_t i = 0; i < b; ++i) row.push_back({order[i], q(weights[i], total)});
      const long reward = static_cast<long>(uniform_index(rng, 21)) - 10;
      m.states[s].push_back({"", std::move(row), q(reward)});
    }
  }
  return m;
}

Mdp generate(const InstanceSpec& spec) {
  using F = InstanceSpec::Family;
  switch (spec.family) {
    case F::Fig1a: return fig1a();
    case F::Fig1b: return fig1b();
    case F::Fig3: return fig3();
    case F::LowerBound: return lower_bound(spec.n, spec.epsilon);
    case F::Healthcare: return healthcare(spec.n);
    case F::Random: return random_mdp(spec.n, spec.k, spec.seed, spec.branching);
  }
  throw std::invalid_argument("unknown instance family");
}

InstanceSpec::Family parse_family(const std::string& name) {
  using F = InstanceSpec::Family;
  if (name == "fig1a") return F::Fig1a;
  if (name == "fig1b") return F::Fig1b;
  if (name == "fig3") return F::Fig3;
  if (name == "lower-bound") return F::LowerBound;
  if (name == "healthcare") return F::Healthcare;
  if (name == "random") return F::Random;
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace blackwell
