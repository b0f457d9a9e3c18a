#include <doctest.h>

#include <cmath>

#include "shiftqr/oracle.hpp"
#include "test_support.hpp"

using namespace shiftqr;
using oracle::PolySpec;

TEST_CASE("char_poly coefficients") {
  CHECK(oracle::char_poly(ComplexMatrix::identity(2)).coefficients == std::vector<Complex>{1.0, -2.0});
  CHECK(oracle::char_poly(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}).coefficients == std::vector<Complex>{-1.0, 0.0});

  // Companion matrix of x^3 - 6x^2 + 11x - 6.
  const ComplexMatrix companion{{0.0, 0.0, 6.0}, {1.0, 0.0, -11.0}, {0.0, 1.0, 6.0}};
  const auto p = oracle::char_poly(companion);
  REQUIRE(p.degree() == 3);
  CHECK(std::abs(p.coefficients[0] - (-6.0)) <= 1e-12);
  CHECK(std::abs(p.coefficients[1] - 11.0) <= 1e-12);
  CHECK(std::abs(p.coefficients[2] - (-6.0)) <= 1e-12);

  CHECK_THROWS_AS(oracle::char_poly(ComplexMatrix::identity(13)), DimensionError);
  CHECK_NOTHROW(oracle::char_poly(ComplexMatrix::identity(12)));
  CHECK_THROWS_AS(oracle::char_poly(ComplexMatrix(2, 3)), DimensionError);
}

TEST_CASE("poly_roots") {
  CHECK(oracle::match_eigenvalues(oracle::poly_roots(PolySpec{{-1.0, 0.0}}), {1.0, -1.0}) <= 1e-14);
  CHECK(oracle::match_eigenvalues(oracle::poly_roots(PolySpec{{1.0, 0.0}}), {Complex{0, 1}, Complex{0, -1}}) <=
        1e-14);
  CHECK(oracle::match_eigenvalues(oracle::poly_roots(PolySpec{{-6.0, 11.0, -6.0}}), {1.0, 2.0, 3.0}) <= 1e-10);
  CHECK_THROWS_AS(oracle::poly_roots(PolySpec{}), DimensionError);

  // A sweep cap of 1 cannot converge from the fixed starting points.
  try {
    oracle::poly_roots(PolySpec{{-6.0, 11.0, -6.0}}, {1e-13, 1});
    FAIL("expected NonConvergence");
  } catch (const oracle::NonConvergence& e) {
    CHECK(e.estimates().size() == 3);
  }
}

TEST_CASE("oracle root sum equals the trace") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const auto a = testing::random_complex(n, seed);
    const auto roots = oracle::eigenvalues(a);
    Complex s{};
    for (const Complex& z : roots) s += z;
    CHECK(std::abs(s - trace(a)) <= 1e-9 * (1.0 + frobenius_norm(a)) * static_cast<double>(n));
  }
}

TEST_CASE("oracle recovers the diagonal of triangular matrices") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 2 + seed % 7;
    auto a = testing::random_complex(n, 100 + seed);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) a(i, j) = 0.0;
    CHECK(oracle::match_eigenvalues(oracle::eigenvalues(a), diagonal_of(a)) <= 1e-9);
  }
}

TEST_CASE("match_eigenvalues") {
  const std::vector<Complex> s{1.0, 2.0, Complex{0, 1}};
  CHECK(oracle::match_eigenvalues(s, s) == 0.0);
  CHECK(oracle::match_eigenvalues({1.0, 2.0}, {2.0000001, 1.0}) == doctest::Approx(1e-7).epsilon(1e-6));
  CHECK(oracle::match_eigenvalues({Complex{0, 1}, Complex{0, -1}, 1.0}, {1.0, Complex{0, -1}, Complex{0, 1}}) == 0.0);
  CHECK_THROWS_AS(oracle::match_eigenvalues({1.0}, {1.0, 2.0}), DimensionError);

  // Bottleneck, not greedy: greedy pairs 0->0.1 first and is left with 1 -> -1 (distance 2).
  CHECK(oracle::match_eigenvalues({0.0, 1.0}, {0.1, -1.0}) == doctest::Approx(1.0));

  // Above the exact limit the greedy bound is still exact on a permutation.
  std::vector<Complex> big, shuffled;
  for (int k = 0; k < 10; ++k) big.emplace_back(k, -k);
  for (int k = 9; k >= 0; --k) shuffled.emplace_back(k, -k);
  CHECK(oracle::match_eigenvalues(big, shuffled) == 0.0);
}
