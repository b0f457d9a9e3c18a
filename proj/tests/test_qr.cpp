#include <doctest.h>

#include <cmath>

#include "shiftqr/oracle.hpp"
#include "shiftqr/qr.hpp"
#include "test_support.hpp"

using namespace shiftqr;

namespace {

double reconstruction(const ComplexMatrix& a, const QRFactors& f) { return frobenius_norm(matmul(f.q, f.r) - a); }

double unitarity(const QRFactors& f) {
  return frobenius_norm(matmul(conjugate_transpose(f.q), f.q) - ComplexMatrix::identity(f.q.rows()));
}

bool diagonal_real_nonnegative(const ComplexMatrix& r) {
  for (std::size_t k = 0; k < r.rows(); ++k)
    if (r(k, k).imag() != 0.0 || r(k, k).real() < 0.0) return false;
  return true;
}

constexpr QRMethod kAll[] = {QRMethod::Householder, QRMethod::Givens, QRMethod::GramSchmidtModified,
                             QRMethod::GramSchmidtClassical};

ComplexMatrix hilbert(std::size_t n) {
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 1.0 / static_cast<double>(i + j + 1);
  return h;
}

}  // namespace

TEST_CASE("identity factors trivially for every kernel") {
  for (QRMethod m : kAll) {
    CAPTURE(to_string(m));
    const auto f = qr_factorize(ComplexMatrix::identity(4), m);
    CHECK(f.q == ComplexMatrix::identity(4));
    CHECK(f.r == ComplexMatrix::identity(4));
  }
}

TEST_CASE("exchange matrix: Q = A, R = I") {
  const ComplexMatrix swap{{0.0, 1.0}, {1.0, 0.0}};
  for (QRMethod m : kAll) {
    CAPTURE(to_string(m));
    const auto f = qr_factorize(swap, m);
    CHECK(testing::max_abs_diff(f.q, swap) <= 1e-15);
    CHECK(testing::max_abs_diff(f.r, ComplexMatrix::identity(2)) <= 1e-15);
  }
}

TEST_CASE("givens leaves an upper-triangular positive-diagonal matrix untouched") {
  const ComplexMatrix a{{2.0, Complex{1, 1}, -3.0}, {0.0, 0.5, Complex{0, 2}}, {0.0, 0.0, 4.0}};
  const auto f = givens_qr(a);
  CHECK(f.q == ComplexMatrix::identity(3));
  CHECK(f.r == a);
}

TEST_CASE("householder on a zero column uses the identity reflector") {
  const ComplexMatrix a{{0.0, 1.0, 2.0}, {0.0, 3.0, 4.0}, {0.0, 5.0, 6.0}};
  const auto f = householder_qr(a);
  CHECK(reconstruction(a, f) <= 1e-14 * frobenius_norm(a));
  CHECK(unitarity(f) <= 1e-14);
  CHECK(subdiagonal_norm(f.r) == 0.0);
  CHECK(f.r(0, 0) == 0.0);
}

TEST_CASE("random complex factorizations meet the residual bounds") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const auto a = testing::random_complex(n, 1000 + seed);
    const double scale = std::max(1.0, frobenius_norm(a));
    for (QRMethod m : kAll) {
      CAPTURE(to_string(m));
      CAPTURE(seed);
      const auto f = qr_factorize(a, m);
      CHECK(reconstruction(a, f) <= 1e-12 * scale);
      CHECK(subdiagonal_norm(f.r) == 0.0);
      CHECK(diagonal_real_nonnegative(f.r));
      CHECK(unitarity(f) <= (m == QRMethod::GramSchmidtClassical ? 1e-6 : 1e-12 * static_cast<double>(n)));
    }
  }
}

TEST_CASE("kernels agree on R and on |det A|") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const auto a = testing::random_complex(n, 77 + seed);
    const double scale = frobenius_norm(a);
    const auto ref = householder_qr(a);
    for (QRMethod m : kAll) {
      CAPTURE(to_string(m));
      CHECK(frobenius_norm(qr_factorize(a, m).r - ref.r) <= 1e-8 * scale);
    }
    CHECK(frobenius_norm(givens_qr(a).r - ref.r) <= 1e-10 * scale);

    // det(A) = (-1)^n c_0 from the characteristic polynomial.
    const auto poly = oracle::char_poly(a);
    const double det_abs = std::abs(poly.coefficients[0]);
    double diag_product = 1.0;
    for (std::size_t k = 0; k < n; ++k) diag_product *= ref.r(k, k).real();
    CHECK(std::abs(diag_product - det_abs) <= 1e-8 * det_abs);
  }
}

TEST_CASE("classical Gram-Schmidt loses more orthogonality than modified on Hilbert(6)") {
  const auto h = hilbert(6);
  const double cgs = unitarity(gram_schmidt_qr(h, GramSchmidtVariant::Classical));
  const double mgs = unitarity(gram_schmidt_qr(h, GramSchmidtVariant::Modified));
  CHECK(cgs > mgs);
  CHECK(unitarity(householder_qr(h)) <= 1e-13);
}

TEST_CASE("Gram-Schmidt reports rank deficiency") {
  const ComplexMatrix a{{1.0, 2.0, 3.0}, {2.0, 4.0, 5.0}, {3.0, 6.0, 7.0}};
  CHECK_THROWS_AS(gram_schmidt_qr(a, GramSchmidtVariant::Modified), RankDeficiency);
  CHECK_THROWS_AS(gram_schmidt_qr(ComplexMatrix::zeros(2, 2), GramSchmidtVariant::Classical), RankDeficiency);
  try {
    gram_schmidt_qr(a, GramSchmidtVariant::Classical);
    FAIL("expected RankDeficiency");
  } catch (const RankDeficiency& e) {
    CHECK(e.column() == 1);
  }
  // Householder and Givens still factor it.
  CHECK(reconstruction(a, householder_qr(a)) <= 1e-13 * frobenius_norm(a));
  CHECK(reconstruction(a, givens_qr(a)) <= 1e-13 * frobenius_norm(a));
}

TEST_CASE("kernels reject non-square and non-finite input") {
  CHECK_THROWS_AS(householder_qr(ComplexMatrix(2, 3)), DimensionError);
  ComplexMatrix bad = ComplexMatrix::identity(2);
  bad(0, 1) = NAN;
  CHECK_THROWS_AS(householder_qr(bad), NumericalBreakdown);
  CHECK_THROWS_AS(givens_qr(bad), NumericalBreakdown);
}

TEST_CASE("method names round-trip") {
  for (QRMethod m : kAll) CHECK(parse_qr_method(to_string(m)) == m);
  CHECK_THROWS_AS(parse_qr_method("lu"), std::invalid_argument);
}
