#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "blackwell/polynomial.hpp"

namespace blackwell {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& x);

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Gauss-Jordan inverse over the rationals. Throws SingularMatrix.
RationalMatrix inverse(const RationalMatrix& a);

/// Solves a x = b over the rationals. Throws SingularMatrix.
std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Fraction-free solution of a square polynomial system A X = B:
/// A * numerators = det * B, where det is a nonzero constant multiple of
/// det(A) and every entry of numerators is a polynomial.
struct FractionFreeSolution {
  Polynomial det;
  PolyMatrix numerators;
};

/// Bareiss elimination with nonzero-pivot row exchange. Rows are first
/// scaled to integer coefficients. Throws SingularMatrix when det(A) = 0.
FractionFreeSolution solve_fraction_free(PolyMatrix a, PolyMatrix b);

}  // namespace blackwell
