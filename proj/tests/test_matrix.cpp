#include <doctest.h>

#include <cmath>

#include "shiftqr/matrix.hpp"
#include "shiftqr/oracle.hpp"
#include "test_support.hpp"

using namespace shiftqr;

TEST_CASE("construction rejects bad shapes and non-finite entries") {
  CHECK_THROWS_AS(ComplexMatrix(0, 3), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex{NAN, 0.0}}), NumericalBreakdown);
  CHECK_THROWS_AS((ComplexMatrix{{1.0, INFINITY}, {0.0, 1.0}}), NumericalBreakdown);
  CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix::identity(2).at(2, 0), DimensionError);
}

TEST_CASE("matmul") {
  const ComplexMatrix a{{1.0, Complex{2, 1}, 3.0}, {0.5, -1.0, Complex{0, 4}}, {2.0, 2.0, 2.0}};
  CHECK(matmul(ComplexMatrix::identity(3), a) == a);
  CHECK(matmul(a, ComplexMatrix::zeros(3, 3)) == ComplexMatrix::zeros(3, 3));
  const ComplexMatrix swap{{0.0, 1.0}, {1.0, 0.0}};
  CHECK(matmul(swap, swap) == ComplexMatrix::identity(2));
  CHECK_THROWS_AS(matmul(a, ComplexMatrix::identity(2)), DimensionError);
}

TEST_CASE("norms") {
  CHECK(frobenius_norm(ComplexMatrix::zeros(3, 3)) == 0.0);
  CHECK(frobenius_norm(ComplexMatrix::identity(3)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(frobenius_norm(ComplexMatrix{{3.0, 4.0}, {0.0, 0.0}}) == 5.0);

  CHECK(subdiagonal_norm(ComplexMatrix{{1.0, 9.0, 9.0}, {0.0, 2.0, 9.0}, {0.0, 0.0, 3.0}}) == 0.0);
  CHECK(subdiagonal_norm(ComplexMatrix{{1.0, 0.0}, {3.0, 1.0}}) == 3.0);
  const ComplexMatrix ones{{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}};
  CHECK(subdiagonal_norm(ones) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(offdiagonal_norm(ones) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
  CHECK_THROWS_AS(subdiagonal_norm(ComplexMatrix(2, 3)), DimensionError);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = testing::random_complex(1 + seed % 7, seed);
    CHECK(subdiagonal_norm(a) <= frobenius_norm(a));
  }
}

TEST_CASE("row_left_norm") {
  const ComplexMatrix upper{{1.0, 2.0, 3.0}, {0.0, 4.0, 5.0}, {0.0, 0.0, 6.0}};
  CHECK(row_left_norm(upper, 1) == 0.0);
  CHECK(row_left_norm(upper, 2) == 0.0);
  CHECK(row_left_norm(ComplexMatrix{{1.0, 2.0}, {5.0, 1.0}}, 1) == 5.0);
  CHECK(row_left_norm(ComplexMatrix{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {3.0, 4.0, 9.0}}, 2) == 5.0);
  CHECK_THROWS_AS(row_left_norm(upper, 0), DimensionError);
  CHECK_THROWS_AS(row_left_norm(upper, 3), DimensionError);
}

TEST_CASE("remove_row_col") {
  CHECK(remove_row_col(ComplexMatrix::identity(3), 2) == ComplexMatrix::identity(2));
  CHECK(remove_row_col(ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}, 0) == ComplexMatrix{{4.0}});
  const ComplexMatrix m{{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}, {7.0, 8.0, 9.0}};
  CHECK(remove_row_col(m, 1) == ComplexMatrix{{1.0, 3.0}, {7.0, 9.0}});
  CHECK_THROWS_AS(remove_row_col(m, 3), DimensionError);
  CHECK_THROWS_AS(remove_row_col(ComplexMatrix{{1.0}}, 0), DimensionError);

  const ComplexMatrix upper{{1.0, 2.0, 3.0, 4.0}, {0.0, 5.0, 6.0, 7.0}, {0.0, 0.0, 8.0, 9.0}, {0.0, 0.0, 0.0, 1.0}};
  for (std::size_t j = 0; j < 4; ++j) CHECK(subdiagonal_norm(remove_row_col(upper, j)) == 0.0);
}

TEST_CASE("trailing_2x2") {
  CHECK(trailing_2x2(ComplexMatrix::identity(3)) == ComplexMatrix::identity(2));
  const ComplexMatrix two{{1.0, 2.0}, {3.0, 4.0}};
  CHECK(trailing_2x2(two) == two);
  CHECK(trailing_2x2(ComplexMatrix{{9.0, 0.0, 0.0}, {0.0, 2.0, 5.0}, {0.0, 7.0, 3.0}}) ==
        ComplexMatrix{{2.0, 5.0}, {7.0, 3.0}});
  CHECK_THROWS_AS(trailing_2x2(ComplexMatrix{{1.0}}), DimensionError);
}

TEST_CASE("balance leaves diagonal and zero matrices alone") {
  const std::vector<Complex> d{1.0, Complex{0, 3}, -7.0};
  const auto diag = ComplexMatrix::diagonal(d);
  const auto rec = balance(diag);
  CHECK(rec.matrix == diag);
  CHECK(rec.scale_factors == std::vector<double>{1.0, 1.0, 1.0});

  const auto zero = balance(ComplexMatrix::zeros(4, 4));
  CHECK(zero.matrix == ComplexMatrix::zeros(4, 4));
  CHECK(zero.scale_factors == std::vector<double>(4, 1.0));
}

TEST_CASE("balance equalizes a badly scaled 2x2") {
  const ComplexMatrix a{{1.0, std::ldexp(1.0, 10)}, {std::ldexp(1.0, -10), 1.0}};
  const auto rec = balance(a);
  CHECK(rec.matrix == ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}});
  CHECK(rec.scale_factors == std::vector<double>{1.0, std::ldexp(1.0, -10)});
}

TEST_CASE("balance is a power-of-two similarity") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    // Wreck the scaling of a random matrix with a diagonal power-of-two similarity.
    const auto base = testing::random_complex(8, seed);
    auto a = base;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        a(i, j) *= std::ldexp(1.0, static_cast<int>((i * 7 + seed) % 9) - static_cast<int>((j * 7 + seed) % 9));

    const auto rec = balance(a);
    for (double s : rec.scale_factors) {
      int e = 0;
      CHECK(std::frexp(s, &e) == 0.5);
    }
    // Reconstruct D^-1 A D entrywise.
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        CHECK(rec.matrix(i, j) == a(i, j) * (rec.scale_factors[j] / rec.scale_factors[i]));

    const Complex t0 = trace(a);
    CHECK(std::abs(trace(rec.matrix) - t0) <= 1e-13 * std::abs(t0));
    CHECK(frobenius_norm(rec.matrix) <= frobenius_norm(a));

    const auto again = balance(rec.matrix);
    CHECK(again.scale_factors == std::vector<double>(8, 1.0));
    CHECK(again.matrix == rec.matrix);

    // `base` has the same spectrum and is well scaled for the oracle.
    const double dist = oracle::match_eigenvalues(oracle::eigenvalues(rec.matrix), oracle::eigenvalues(base));
    CHECK(dist <= 1e-8);
  }
}
