#include "blackwell/laurent.hpp"

#include <stdexcept>

namespace blackwell {

RationalMatrix limiting_matrix(const RationalMatrix& P) {
  const std::size_t n = P.rows();
  PolyMatrix a(n, n);
  PolyMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (1 + rho) I - P
      const Rational diag(i == j ? 1 : 0);
      a(i, j) = Polynomial({Rational(diag - P(i, j)), diag});
    }
    id(i, i) = Polynomial::constant(1);
  }
  const FractionFreeSolution sol = solve_fraction_free(std::move(a), std::move(id));
  const std::size_t m0 = multiplicity_at_zero(sol.det);
  const Rational det_low = sol.det.coefficient(m0);

  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial& num = sol.numerators(i, j);
      if (num.is_zero()) continue;
      // rho * num / det at rho -> 0
      const std::size_t k = multiplicity_at_zero(num) + 1;
      if (k < m0) throw std::logic_error("limiting matrix entry diverges");
      if (k == m0) out(i, j) = num.coefficient(k - 1) / det_low;
    }
  }
  return out;
}

RationalMatrix limiting_matrix(const Mdp& m, const Policy& pi) { return limiting_matrix(transition_matrix(m, pi).P); }

RationalMatrix deviation_matrix(const RationalMatrix& P, const RationalMatrix& Pstar) {
  const RationalMatrix I = RationalMatrix::identity(P.rows());
  try {
    return (I - Pstar) * inverse(Pstar - P + I);
  } catch (const SingularMatrix&) {
    throw std::logic_error("P* - (P - I) is singular; P* is not the limiting matrix of P");
  }
}

std::vector<std::vector<Rational>> laurent_terms(const Mdp& m, const Policy& pi) {
  const PolicyChain chain = transition_matrix(m, pi);
  const std::size_t n = m.n();
  const RationalMatrix Pstar = limiting_matrix(chain.P);
  const RationalMatrix D = deviation_matrix(chain.P, Pstar);
  std::vector<std::vector<Rational>> y;
  y.push_back(Pstar * chain.r);
  std::vector<Rational> power = chain.r;  // (-1)^j D^(j+1) r, built iteratively
  for (std::size_t j = 0; j <= n; ++j) {
    power = D * power;
    if (j > 0) {
      for (auto& x : power) x = -x;
    }
    y.push_back(power);
  }
  return y;
}

Rational PsiMatrix::leading(std::size_t s) const {
  if (!first_nonzero[s]) return Rational(0);
  return column(*first_nonzero[s])[s];
}

PsiMatrix psi_matrix(const Mdp& m, const Policy& pi, std::size_t a) {
  const std::size_t n = m.n();
  const auto y = laurent_terms(m, pi);
  // P_a and r_a, following pi where a is unavailable.
  Policy pa = pi;
  for (std::size_t s = 0; s < n; ++s) {
    if (a < m.num_actions(s)) pa[s] = a;
  }
  const PolicyChain chain_a = transition_matrix(m, pa);
  const RationalMatrix Pa_minus_I = chain_a.P - RationalMatrix::identity(n);

  PsiMatrix psi;
  for (std::size_t col = 0; col < y.size(); ++col) {
    std::vector<Rational> c = Pa_minus_I * y[col];
    if (col >= 1) {
      for (std::size_t s = 0; s < n; ++s) c[s] -= y[col - 1][s];
    }
    if (col == 1) {
      for (std::size_t s = 0; s < n; ++s) c[s] += chain_a.r[s];
    }
    psi.columns.push_back(std::move(c));
  }
  psi.first_nonzero.assign(n, std::nullopt);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t col = 0; col < psi.columns.size(); ++col) {
      if (sgn(psi.columns[col][s]) != 0) {
        psi.first_nonzero[s] = static_cast<int>(col) - 1;
        break;
      }
    }
  }
  return psi;
}

std::vector<std::size_t> laurent_improving_states(const Mdp& m, const Policy& pi, std::size_t a) {
  const PsiMatrix psi = psi_matrix(m, pi, a);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < m.n(); ++s) {
    if (sgn(psi.leading(s)) > 0) out.push_back(s);
  }
  return out;
}

}  // namespace blackwell
