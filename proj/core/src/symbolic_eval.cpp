#include "blackwell/symbolic_eval.hpp"

#include "blackwell/linalg.hpp"

namespace blackwell {

std::vector<RationalFunction> SymbolicValue::values() const {
  std::vector<RationalFunction> out;
  out.reserve(numerators.size());
  for (std::size_t s = 0; s < numerators.size(); ++s) out.push_back(value(s));
  return out;
}

std::vector<Rational> SymbolicValue::evaluate(const Rational& g) const {
  const Rational d = det(g);
  if (sgn(d) == 0) throw std::domain_error("policy value evaluated at a pole");
  std::vector<Rational> out;
  out.reserve(numerators.size());
  for (const auto& p : numerators) out.push_back(p(g) / d);
  return out;
}

SymbolicValue policy_evaluate_symbolic(const Mdp& m, const Policy& pi) {
  const PolicyChain chain = transition_matrix(m, pi);
  const std::size_t n = m.n();
  PolyMatrix a(n, n);
  PolyMatrix b(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // I - g P
      a(i, j) = Polynomial({Rational(i == j ? 1 : 0), Rational(-chain.P(i, j))});
    }
    b(i, 0) = Polynomial::constant(chain.r[i]);
  }
  FractionFreeSolution sol = solve_fraction_free(std::move(a), std::move(b));
  SymbolicValue v{std::move(sol.det), {}};
  v.numerators.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.numerators.push_back(std::move(sol.numerators(i, 0)));
  return v;
}

Polynomial q_numerator(const Mdp& m, const SymbolicValue& v, std::size_t s, std::size_t a) {
  const Action& act = m.action(s, a);
  Polynomial next;
  for (const auto& t : act.transitions) {
    if (sgn(t.p) != 0) next += v.numerators[t.to] * t.p;
  }
  // R * det + g * next
  return v.det * act.reward + Polynomial::monomial(1, 1) * next;
}

Polynomial advantage_numerator(const Mdp& m, const SymbolicValue& v, std::size_t s, std::size_t a) {
  return q_numerator(m, v, s, a) - v.numerators[s];
}

RationalFunction q_value(const Mdp& m, const SymbolicValue& v, std::size_t s, std::size_t a) {
  return RationalFunction(q_numerator(m, v, s, a), v.det);
}

RationalFunction advantage(const Mdp& m, const SymbolicValue& v, std::size_t s, std::size_t a) {
  return RationalFunction(advantage_numerator(m, v, s, a), v.det);
}

std::vector<std::vector<RationalFunction>> q_values_symbolic(const Mdp& m, const Policy& pi) {
  const SymbolicValue v = policy_evaluate_symbolic(m, pi);
  std::vector<std::vector<RationalFunction>> q(m.n());
  for (std::size_t s = 0; s < m.n(); ++s) {
    for (std::size_t a = 0; a < m.num_actions(s); ++a) q[s].push_back(q_value(m, v, s, a));
  }
  return q;
}

std::vector<ImprovingPair> improving_pairs_with_gaps(const Mdp& m, const Policy& pi, const SymbolicValue& v) {
  std::vector<ImprovingPair> out;
  const int det_sign = sign_near_one(v.det);
  for (std::size_t s = 0; s < m.n(); ++s) {
    for (std::size_t a = 0; a < m.num_actions(s); ++a) {
      if (a == pi[s]) continue;
      Polynomial num = advantage_numerator(m, v, s, a);
      if (sign_near_one(num) * det_sign > 0) out.push_back({{s, a}, RationalFunction(std::move(num), v.det)});
    }
  }
  return out;
}

std::vector<ImprovingPair> improving_pairs_with_gaps(const Mdp& m, const Policy& pi) {
  return improving_pairs_with_gaps(m, pi, policy_evaluate_symbolic(m, pi));
}

std::vector<StateAction> improving_pairs(const Mdp& m, const Policy& pi) {
  std::vector<StateAction> out;
  for (auto& ip : improving_pairs_with_gaps(m, pi)) out.push_back(ip.pair);
  return out;
}

int compare_values(const std::vector<RationalFunction>& a, const std::vector<RationalFunction>& b) {
  bool greater = false;
  bool less = false;
  for (std::size_t s = 0; s < a.size(); ++s) {
    switch (mu_compare(a[s], b[s])) {
      case MuOrdering::Greater: greater = true; break;
      case MuOrdering::Less: less = true; break;
      case MuOrdering::Equal: break;
    }
  }
  if (greater && less) return 2;
  if (greater) return 1;
  if (less) return -1;
  return 0;
}

}  // namespace blackwell
