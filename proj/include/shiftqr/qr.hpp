#pragma once

#include <string_view>

#include "shiftqr/matrix.hpp"

namespace shiftqr {

enum class QRMethod { Householder, Givens, GramSchmidtClassical, GramSchmidtModified };

enum class GramSchmidtVariant { Classical, Modified };

/// A = Q R with Q unitary and R upper triangular.
///
/// All kernels return the same normalization: diag(R) is real and
/// nonnegative, and entries below the diagonal of R are exact zeros. For
/// nonsingular A this makes the factorization unique, so kernels can be
/// compared entrywise.
struct QRFactors {
  ComplexMatrix q;
  ComplexMatrix r;
};

QRFactors householder_qr(const ComplexMatrix& a);
QRFactors givens_qr(const ComplexMatrix& a);

/// Throws RankDeficiency when a pivot column norm drops to 1e-14 * ||A||_F or below.
QRFactors gram_schmidt_qr(const ComplexMatrix& a, GramSchmidtVariant variant);

QRFactors qr_factorize(const ComplexMatrix& a, QRMethod method);

std::string_view to_string(QRMethod method);

/// Accepts "householder", "givens", "cgs", "mgs".
QRMethod parse_qr_method(std::string_view name);

}  // namespace shiftqr
