#pragma once

#include <string_view>

#include "shiftqr/matrix.hpp"

namespace shiftqr {

enum class ShiftStrategy { NoShift, Rayleigh, Wilkinson };

/// Entries of the trailing 2x2 block [[a_prev, b_super], [b_sub, a_last]].
struct WilkinsonInputs {
  Complex a_prev;
  Complex a_last;
  Complex b_sub;
  Complex b_super;

  static WilkinsonInputs from_block(const ComplexMatrix& b);
};

/// Both eigenvalues of a 2x2 block, larger magnitude first.
struct Eigenpair2x2 {
  Complex larger;
  Complex smaller;
};

Eigenpair2x2 eigenvalues_2x2(const WilkinsonInputs& in);

/// Eigenvalue of the 2x2 block `b` closer to b(1,1).
///
/// Equal distances are broken by the total order (real part, then imaginary
/// part), returning the smaller root. For a real symmetric block with
/// b(0,0) == b(1,1) this is the closed-form a_m - |b| choice with sign(0) = +1.
Complex wilkinson_shift(const ComplexMatrix& b);

/// Bottom-right entry of `a`.
Complex rayleigh_shift(const ComplexMatrix& a);

/// Shift for the active block under `strategy`; NoShift yields 0.
Complex compute_shift(const ComplexMatrix& a, ShiftStrategy strategy);

std::string_view to_string(ShiftStrategy s);

/// Accepts "none", "rayleigh", "wilkinson".
ShiftStrategy parse_shift_strategy(std::string_view name);

}  // namespace shiftqr
