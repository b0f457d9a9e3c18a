#include "shiftqr/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace shiftqr {

namespace {

void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionError(std::string(op) + ": expected a square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("ComplexMatrix: dimensions must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("ComplexMatrix: dimensions must be >= 1");
  if (data_.size() != rows * cols) {
    throw DimensionError("ComplexMatrix: expected " + std::to_string(rows * cols) +
                         " entries, got " + std::to_string(data_.size()));
  }
  if (!all_finite()) throw NumericalBreakdown("ComplexMatrix: non-finite entry");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("ComplexMatrix: dimensions must be >= 1");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw NumericalBreakdown("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix out(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  if (!out.all_finite()) throw NumericalBreakdown("ComplexMatrix: non-finite entry");
  return out;
}

const Complex& ComplexMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("ComplexMatrix::at: index out of range");
  return (*this)(i, j);
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), finite);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions differ (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out_row = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      auto b_row = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix subtraction: shape mismatch");
  }
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

ComplexMatrix conjugate_transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix add_identity(const ComplexMatrix& a, Complex shift) {
  require_square(a, "add_identity");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) += shift;
  return out;
}

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

std::vector<Complex> diagonal_of(const ComplexMatrix& a) {
  std::vector<Complex> d(std::min(a.rows(), a.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a(i, i);
  return d;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.data()) sum += std::norm(z);
  return std::sqrt(sum);
}

double subdiagonal_norm(const ComplexMatrix& a) {
  require_square(a, "subdiagonal_norm");
  double sum = 0.0;
  for (std::size_t i = 1; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

double offdiagonal_norm(const ComplexMatrix& a) {
  require_square(a, "offdiagonal_norm");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

double row_left_norm(const ComplexMatrix& a, std::size_t j) {
  require_square(a, "row_left_norm");
  if (j < 1 || j >= a.rows()) {
    throw DimensionError("row_left_norm: index " + std::to_string(j) + " outside [1, " +
                         std::to_string(a.rows() - 1) + "]");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < j; ++k) sum += std::norm(a(j, k));
  return std::sqrt(sum);
}

ComplexMatrix remove_row_col(const ComplexMatrix& a, std::size_t j) {
  require_square(a, "remove_row_col");
  const std::size_t n = a.rows();
  if (n < 2) throw DimensionError("remove_row_col: matrix is 1x1");
  if (j >= n) throw DimensionError("remove_row_col: index " + std::to_string(j) + " out of range");
  ComplexMatrix out(n - 1, n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == j) continue;
    for (std::size_t k = 0, ok = 0; k < n; ++k) {
      if (k == j) continue;
      out(oi, ok++) = a(i, k);
    }
    ++oi;
  }
  return out;
}

ComplexMatrix trailing_2x2(const ComplexMatrix& a) {
  require_square(a, "trailing_2x2");
  const std::size_t n = a.rows();
  if (n < 2) throw DimensionError("trailing_2x2: matrix is 1x1");
  return ComplexMatrix{{a(n - 2, n - 2), a(n - 2, n - 1)}, {a(n - 1, n - 2), a(n - 1, n - 1)}};
}

BalanceRecord balance(const ComplexMatrix& a) {
  require_square(a, "balance");
  constexpr double kRadix = 2.0;
  constexpr double kRadixSq = kRadix * kRadix;
  const std::size_t n = a.rows();

  ComplexMatrix m = a;
  std::vector<double> scale(n, 1.0);

  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;

      const double s = c + r;
      double f = 1.0;
      double g = r / kRadix;
      while (c < g) {
        f *= kRadix;
        c *= kRadixSq;
      }
      g = r * kRadix;
      while (c > g) {
        f /= kRadix;
        c /= kRadixSq;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        scale[i] *= f;
        const double inv = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) m(i, j) *= inv;
        for (std::size_t j = 0; j < n; ++j) m(j, i) *= f;
      }
    }
  }

  // Only ratios matter for D^-1 A D; pin the largest factor to 1.
  const double largest = *std::max_element(scale.begin(), scale.end());
  for (double& s : scale) s /= largest;

  return {std::move(scale), std::move(m)};
}

}  // namespace shiftqr
