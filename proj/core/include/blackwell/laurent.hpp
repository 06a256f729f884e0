#pragma once

#include <optional>
#include <vector>

#include "blackwell/linalg.hpp"
#include "blackwell/mdp.hpp"

namespace blackwell {

/// Cesaro limit P* = lim_{rho -> 0} rho ((1 + rho) I - P)^-1, computed
/// symbolically in rho.
RationalMatrix limiting_matrix(const RationalMatrix& P);
RationalMatrix limiting_matrix(const Mdp& m, const Policy& pi);

/// D = (I - P*)(P* - (P - I))^-1.
RationalMatrix deviation_matrix(const RationalMatrix& P, const RationalMatrix& Pstar);

/// Laurent coefficients of the value around g = 1 in rho = (1 - g) / g:
/// y[0] = P* r (gain), y[j + 1] = (-1)^j D^(j+1) r for j = 0..n.
std::vector<std::vector<Rational>> laurent_terms(const Mdp& m, const Policy& pi);

/// Laurent coefficients of q_a - v in rho, columns j = -1..n.
/// A state without action a follows pi, so its row is zero.
struct PsiMatrix {
  /// columns[j + 1] is psi_j.
  std::vector<std::vector<Rational>> columns;
  /// Per state, the least j with psi_j(s) != 0.
  std::vector<std::optional<int>> first_nonzero;

  const std::vector<Rational>& column(int j) const { return columns.at(static_cast<std::size_t>(j + 1)); }
  /// psi_{j0}(s), or 0 when the row vanishes.
  Rational leading(std::size_t s) const;
};

PsiMatrix psi_matrix(const Mdp& m, const Policy& pi, std::size_t a);

/// States whose first nonzero psi entry is positive.
std::vector<std::size_t> laurent_improving_states(const Mdp& m, const Policy& pi, std::size_t a);

}  // namespace blackwell
