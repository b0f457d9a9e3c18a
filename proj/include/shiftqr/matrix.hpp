#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "shiftqr/errors.hpp"

namespace shiftqr {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major, 0-based (i, j) indexing.
///
/// Every public constructor rejects non-finite entries. Element access through
/// operator() is unchecked and may write anything; kernels that can produce
/// non-finite values call all_finite() and report a NumericalBreakdown.
class ComplexMatrix {
 public:
  /// rows x cols matrix of zeros.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
  }
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  /// Bounds-checked access.
  const Complex& at(std::size_t i, std::size_t j) const;

  std::span<Complex> row(std::size_t i) noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const Complex> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<const Complex> data() const noexcept { return data_; }

  bool all_finite() const noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conjugate_transpose(const ComplexMatrix& a);

/// a + shift * I (square only).
ComplexMatrix add_identity(const ComplexMatrix& a, Complex shift);

Complex trace(const ComplexMatrix& a);
std::vector<Complex> diagonal_of(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

/// Frobenius norm of the strictly lower triangle. Zero exactly for upper-triangular input.
double subdiagonal_norm(const ComplexMatrix& a);

/// Frobenius norm of everything off the diagonal (both triangles).
double offdiagonal_norm(const ComplexMatrix& a);

/// Euclidean norm of a(j, 0..j-1).
double row_left_norm(const ComplexMatrix& a, std::size_t j);

/// Copy of `a` with row j and column j deleted.
ComplexMatrix remove_row_col(const ComplexMatrix& a, std::size_t j);

/// Lower-right 2x2 block.
ComplexMatrix trailing_2x2(const ComplexMatrix& a);

struct BalanceRecord {
  /// Diagonal of D, each an exact power of two, normalized so the largest is 1.
  std::vector<double> scale_factors;
  /// D^-1 * original * D.
  ComplexMatrix matrix;
};

/// Parlett-Reinsch diagonal balancing with radix 2 (no permutations).
BalanceRecord balance(const ComplexMatrix& a);

}  // namespace shiftqr
