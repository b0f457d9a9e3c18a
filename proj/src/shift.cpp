#include "shiftqr/shift.hpp"

#include <cmath>
#include <string>

namespace shiftqr {

WilkinsonInputs WilkinsonInputs::from_block(const ComplexMatrix& b) {
  if (b.rows() != 2 || b.cols() != 2) throw DimensionError("wilkinson_shift: expected a 2x2 block");
  return {b(0, 0), b(1, 1), b(1, 0), b(0, 1)};
}

Eigenpair2x2 eigenvalues_2x2(const WilkinsonInputs& in) {
  // Triangular block: the eigenvalues are the diagonal entries, exactly.
  if (in.b_super * in.b_sub == Complex{}) {
    if (std::abs(in.a_prev) >= std::abs(in.a_last)) return {in.a_prev, in.a_last};
    return {in.a_last, in.a_prev};
  }
  // lambda = h +/- sqrt(((a - d)/2)^2 + b c); the half-difference form avoids
  // the cancellation in tr^2 - 4 det.
  const Complex h = 0.5 * (in.a_prev + in.a_last);
  const Complex half_gap = 0.5 * (in.a_prev - in.a_last);
  const Complex s = std::sqrt(half_gap * half_gap + in.b_super * in.b_sub);
  // Pick the sign that adds h and s constructively.
  const Complex larger = (std::real(std::conj(h) * s) >= 0.0) ? h + s : h - s;
  if (larger == Complex{}) return {larger, Complex{}};
  const Complex det = in.a_prev * in.a_last - in.b_super * in.b_sub;
  return {larger, det / larger};
}

Complex wilkinson_shift(const ComplexMatrix& b) {
  const WilkinsonInputs in = WilkinsonInputs::from_block(b);
  const auto [l1, l2] = eigenvalues_2x2(in);
  const double d1 = std::abs(l1 - in.a_last);
  const double d2 = std::abs(l2 - in.a_last);
  if (d1 < d2) return l1;
  if (d2 < d1) return l2;
  if (l1.real() != l2.real()) return l1.real() < l2.real() ? l1 : l2;
  return l1.imag() <= l2.imag() ? l1 : l2;
}

Complex rayleigh_shift(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("rayleigh_shift: expected a square matrix");
  const std::size_t n = a.rows();
  return a(n - 1, n - 1);
}

Complex compute_shift(const ComplexMatrix& a, ShiftStrategy strategy) {
  switch (strategy) {
    case ShiftStrategy::NoShift:
      return {};
    case ShiftStrategy::Rayleigh:
      return rayleigh_shift(a);
    case ShiftStrategy::Wilkinson:
      return a.rows() < 2 ? rayleigh_shift(a) : wilkinson_shift(trailing_2x2(a));
  }
  return {};
}

std::string_view to_string(ShiftStrategy s) {
  switch (s) {
    case ShiftStrategy::NoShift:
      return "none";
    case ShiftStrategy::Rayleigh:
      return "rayleigh";
    case ShiftStrategy::Wilkinson:
      return "wilkinson";
  }
  return "unknown";
}

ShiftStrategy parse_shift_strategy(std::string_view name) {
  if (name == "none") return ShiftStrategy::NoShift;
  if (name == "rayleigh") return ShiftStrategy::Rayleigh;
  if (name == "wilkinson") return ShiftStrategy::Wilkinson;
  throw std::invalid_argument("unknown shift strategy '" + std::string(name) + "'");
}

}  // namespace shiftqr
