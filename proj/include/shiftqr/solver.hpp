#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "shiftqr/matrix.hpp"
#include "shiftqr/qr.hpp"
#include "shiftqr/shift.hpp"

namespace shiftqr {

enum class DeflationMode {
  /// Scan rows n-1 down to 1, deflating the first whose left part is small.
  Paper,
  /// Test only the last row.
  TrailingOnly,
};

struct SolverConfig {
  std::size_t k_max = 1000;
  double eps = 1e-10;
  double deflation_tol = 1e-12;
  ShiftStrategy shift = ShiftStrategy::Wilkinson;
  QRMethod qr_method = QRMethod::Householder;
  DeflationMode deflation_mode = DeflationMode::Paper;
  bool do_balance = true;
  /// Enhanced solver only: after this many QR steps without a deflation, take
  /// one step with a complex exceptional shift. Breaks the stall of a real
  /// block whose trailing 2x2 keeps real eigenvalues. 0 disables.
  std::size_t exceptional_shift_period = 10;

  /// Throws std::invalid_argument on k_max == 0, non-positive tolerances,
  /// or deflation_tol > eps.
  void validate() const;

  static SolverConfig enhanced_defaults() { return {}; }
  static SolverConfig baseline_defaults(ShiftStrategy shift) {
    SolverConfig cfg;
    cfg.shift = shift;
    cfg.do_balance = false;
    return cfg;
  }
};

/// One outer-loop pass.
struct IterationRecord {
  std::size_t iteration = 0;
  /// Active dimension at the end of the pass.
  std::size_t dimension = 0;
  /// Strictly-lower norm of the active block at the end of the pass.
  double subdiag_norm = 0.0;
  /// Both-triangle off-diagonal norm, for plotting the other reading.
  double offdiag_norm = 0.0;
  /// Shift used by this pass's QR step (0 when no step ran).
  Complex shift{};
  bool deflated = false;
  bool qr_step = false;
  /// |trace after step - trace before step| of the active block.
  double trace_drift = 0.0;
};

using IterationTrace = std::vector<IterationRecord>;

struct EigenReport {
  std::vector<Complex> eigenvalues;
  /// Outer-loop passes, including deflation-only passes.
  std::size_t iterations = 0;
  std::size_t deflations = 0;
  bool converged = false;
  IterationTrace trace;
};

/// R Q + shift * I where (a - shift * I) = Q R. A unitary similarity of `a`.
ComplexMatrix qr_step(const ComplexMatrix& a, Complex shift, QRMethod method);

struct DeflationResult {
  ComplexMatrix matrix;
  /// Zero or one value.
  std::vector<Complex> extracted;
  /// Removed row/column, meaningful only when `extracted` is non-empty.
  std::size_t index = 0;
};

/// At most one deflation per call.
DeflationResult deflation_sweep(const ComplexMatrix& a, double deflation_tol, DeflationMode mode);

/// Wilkinson-shifted QR iteration with per-pass deflation and optional
/// balancing. One outer pass either deflates a row (then restarts) or takes
/// one shifted QR step; the run converges when the active block is 1x1 or
/// its subdiagonal norm drops below cfg.eps.
///
/// When k_max passes run out the report still carries n values (extracted
/// ones plus the current diagonal) with converged == false. A non-finite
/// iterate throws NumericalBreakdown carrying the pass index.
EigenReport enhanced_shifted_qr(const ComplexMatrix& a, const SolverConfig& cfg);

/// Shifted (or unshifted) QR iteration without deflation. Iterations count QR steps.
EigenReport baseline_qr(const ComplexMatrix& a, const SolverConfig& cfg);

std::string_view to_string(DeflationMode mode);
DeflationMode parse_deflation_mode(std::string_view name);

}  // namespace shiftqr
