#include <doctest.h>

#include "blackwell/linalg.hpp"
#include "oracles.hpp"

using namespace blackwell;

namespace {
RationalMatrix rand_matrix(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = bwtest::rand_rational(rng, 5, 3);
  }
  return a;
}
}  // namespace

TEST_CASE("inverse and solve") {
  RationalMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  const auto inv = inverse(a);
  CHECK(a * inv == RationalMatrix::identity(2));
  CHECK(solve(a, {3, 2}) == std::vector<Rational>{1, 1});
  RationalMatrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK_THROWS_AS(inverse(s), SingularMatrix);
}

TEST_CASE("property: rational solve matches reference elimination") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(bwtest::rand_int(rng, 1, 5));
    const RationalMatrix a = rand_matrix(rng, n);
    std::vector<Rational> b(n);
    for (auto& x : b) x = bwtest::rand_rational(rng);
    std::vector<Rational> x;
    try {
      x = solve(a, b);
    } catch (const SingularMatrix&) {
      continue;
    }
    CHECK(a * x == b);
    bwtest::QMatrix q(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) q[r][c] = a(r, c);
    }
    CHECK(bwtest::gauss_solve(q, b) == x);
  }
}

TEST_CASE("property: fraction-free solve matches Cramer") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(bwtest::rand_int(rng, 1, 4));
    PolyMatrix a(n, n);
    PolyMatrix b(n, 1);
    std::vector<std::vector<Polynomial>> ref(n, std::vector<Polynomial>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) ref[r][c] = a(r, c) = bwtest::rand_poly(rng, 2);
      b(r, 0) = bwtest::rand_poly(rng, 2);
    }
    const Polynomial det = bwtest::cofactor_det(ref);
    if (det.is_zero()) {
      CHECK_THROWS_AS(solve_fraction_free(a, b), SingularMatrix);
      continue;
    }
    const auto sol = solve_fraction_free(a, b);
    // det is a constant multiple of the true determinant.
    CHECK(divmod(sol.det, det).remainder.is_zero());
    CHECK(sol.det.degree() == det.degree());
    for (std::size_t s = 0; s < n; ++s) {
      auto as = ref;
      for (std::size_t r = 0; r < n; ++r) as[r][s] = b(r, 0);
      CHECK(RationalFunction(sol.numerators(s, 0), sol.det) == RationalFunction(bwtest::cofactor_det(as), det));
    }
  }
}
