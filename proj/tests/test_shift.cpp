#include <doctest.h>

#include <cmath>

#include "shiftqr/shift.hpp"
#include "test_support.hpp"

using namespace shiftqr;

TEST_CASE("wilkinson shift: worked examples") {
  CHECK(wilkinson_shift(ComplexMatrix{{2.0, 0.0}, {0.0, 5.0}}) == Complex{5.0, 0.0});

  // Roots {1, 3} tie at distance 1 from a_m = 2; the closed form a_m - b^2/(|d| + sqrt(d^2 + b^2)) with d = 0 gives 1.
  const Complex tie = wilkinson_shift(ComplexMatrix{{2.0, 1.0}, {1.0, 2.0}});
  CHECK(std::abs(tie - 1.0) <= 1e-15);

  const Complex mu = wilkinson_shift(ComplexMatrix{{3.0, 1.0}, {2.0, 0.0}});
  CHECK(std::abs(mu - (3.0 - std::sqrt(17.0)) / 2.0) <= 1e-14);
  CHECK(mu.real() == doctest::Approx(-0.56155).epsilon(1e-5));

  // lambda^2 + 1: +i and -i are equidistant from 0; the smaller imaginary part wins.
  const Complex rot = wilkinson_shift(ComplexMatrix{{0.0, -1.0}, {1.0, 0.0}});
  CHECK(std::abs(rot - Complex{0.0, -1.0}) <= 1e-15);
}

TEST_CASE("wilkinson shift rejects non-2x2 input") {
  CHECK_THROWS_AS(wilkinson_shift(ComplexMatrix::identity(3)), DimensionError);
}

TEST_CASE("wilkinson shift properties on random blocks") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto b = (seed % 2) ? testing::random_complex(2, seed) : testing::random_real(2, seed);
    const Complex mu = wilkinson_shift(b);
    const Complex tr = b(0, 0) + b(1, 1);
    const Complex det = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
    const double f2 = std::pow(frobenius_norm(b), 2);
    CAPTURE(seed);
    CHECK(std::abs(mu * mu - tr * mu + det) <= 1e-12 * (1.0 + f2));

    const Complex other = tr - mu;
    CHECK(std::abs(mu - b(1, 1)) <= std::abs(other - b(1, 1)) + 1e-12 * (1.0 + f2));
  }
}

TEST_CASE("wilkinson shift of a triangular block is a diagonal entry exactly") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto b = testing::random_complex(2, 300 + seed);
    if (seed % 3 == 0) b(0, 1) = 0.0;
    else b(1, 0) = 0.0;
    CHECK(wilkinson_shift(b) == b(1, 1));
  }
  CHECK(wilkinson_shift(ComplexMatrix{{0.1, 0.0}, {0.0, 0.7}}) == Complex{0.7, 0.0});
}

TEST_CASE("rayleigh shift is the corner entry") {
  CHECK(rayleigh_shift(ComplexMatrix::identity(3)) == Complex{1.0, 0.0});
  CHECK(rayleigh_shift(ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}) == Complex{4.0, 0.0});
  const std::vector<Complex> d{7.0, Complex{0.0, -2.0}};
  CHECK(rayleigh_shift(ComplexMatrix::diagonal(d)) == Complex{0.0, -2.0});
}

TEST_CASE("compute_shift dispatch") {
  const ComplexMatrix a{{3.0, 1.0}, {2.0, 0.0}};
  CHECK(compute_shift(a, ShiftStrategy::NoShift) == Complex{});
  CHECK(compute_shift(a, ShiftStrategy::Rayleigh) == Complex{0.0, 0.0});
  CHECK(compute_shift(a, ShiftStrategy::Wilkinson) == wilkinson_shift(a));
  CHECK(parse_shift_strategy("wilkinson") == ShiftStrategy::Wilkinson);
  CHECK_THROWS_AS(parse_shift_strategy("francis"), std::invalid_argument);
}
