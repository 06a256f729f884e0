#include "blackwell/linalg.hpp"

#include <utility>

namespace blackwell {

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        t = a(i, k) * b(k, j);
        out(i, j) += t;
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<Rational> out(a.rows());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      t = a(i, j) * x[j];
      out[i] += t;
    }
  }
  return out;
}

namespace {

// Reduces [a | b] to [I | a^-1 b] in place.
void gauss_jordan(RationalMatrix& a, RationalMatrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("gauss_jordan: shape mismatch");
  Rational t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a(piv, k)) == 0) ++piv;
    if (piv == n) throw SingularMatrix("singular matrix");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(piv, j));
    }
    const Rational inv = 1 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) a(k, j) *= inv;
    for (std::size_t j = 0; j < b.cols(); ++j) b(k, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        t = f * a(k, j);
        a(i, j) -= t;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        t = f * b(k, j);
        b(i, j) -= t;
      }
    }
  }
}

}  // namespace

RationalMatrix inverse(const RationalMatrix& a) {
  RationalMatrix work = a;
  RationalMatrix out = RationalMatrix::identity(a.rows());
  gauss_jordan(work, out);
  return out;
}

std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  RationalMatrix work = a;
  RationalMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  gauss_jordan(work, rhs);
  std::vector<Rational> x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
  return x;
}

namespace {

void scale_to_integers(PolyMatrix& a, PolyMatrix& b, std::size_t row) {
  mpz_class l = 1;
  auto absorb = [&l](const Polynomial& p) {
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  };
  for (std::size_t j = 0; j < a.cols(); ++j) absorb(a(row, j));
  for (std::size_t j = 0; j < b.cols(); ++j) absorb(b(row, j));
  if (l == 1) return;
  const Rational s(l);
  for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= s;
  for (std::size_t j = 0; j < b.cols(); ++j) b(row, j) *= s;
}

}  // namespace

FractionFreeSolution solve_fraction_free(PolyMatrix a, PolyMatrix b) {
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve_fraction_free: shape mismatch");
  if (n == 0) return {Polynomial::constant(1), PolyMatrix(0, m)};
  for (std::size_t i = 0; i < n; ++i) scale_to_integers(a, b, i);

  Polynomial prev = Polynomial::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) throw SingularMatrix("singular polynomial matrix");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(b(k, j), b(piv, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Polynomial f = a(i, k);
      if (f.is_zero()) {
        // The update reduces to a(k,k) * a(i,j) / prev.
        for (std::size_t j = k + 1; j < n; ++j) a(i, j) = exact_quotient(a(k, k) * a(i, j), prev);
        for (std::size_t j = 0; j < m; ++j) b(i, j) = exact_quotient(a(k, k) * b(i, j), prev);
        continue;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - f * a(k, j), prev);
      }
      for (std::size_t j = 0; j < m; ++j) {
        b(i, j) = exact_quotient(a(k, k) * b(i, j) - f * b(k, j), prev);
      }
      a(i, k) = Polynomial{};
    }
    prev = a(k, k);
  }

  // a is upper triangular with a(n-1,n-1) = +-det(scaled A). Back substitution
  // keeps numerators polynomial: x_i = N_i / det with N_i exact.
  const Polynomial det = a(n - 1, n - 1);
  PolyMatrix num(n, m);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      Polynomial acc = det * b(i, c);
      for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * num(j, c);
      num(i, c) = exact_quotient(acc, a(i, i));
    }
  }
  return {det, std::move(num)};
}

}  // namespace blackwell
