#include "shiftqr/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace shiftqr {

void SolverConfig::validate() const {
  if (k_max < 1) throw std::invalid_argument("SolverConfig: k_max must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("SolverConfig: eps must be > 0");
  if (!(deflation_tol > 0.0)) throw std::invalid_argument("SolverConfig: deflation_tol must be > 0");
  if (deflation_tol > eps) throw std::invalid_argument("SolverConfig: deflation_tol must be <= eps");
}

ComplexMatrix qr_step(const ComplexMatrix& a, Complex shift, QRMethod method) {
  const QRFactors f = qr_factorize(add_identity(a, -shift), method);
  return add_identity(matmul(f.r, f.q), shift);
}

DeflationResult deflation_sweep(const ComplexMatrix& a, double deflation_tol, DeflationMode mode) {
  if (!a.is_square()) throw DimensionError("deflation_sweep: expected a square matrix");
  const std::size_t n = a.rows();
  const std::size_t lowest = (mode == DeflationMode::TrailingOnly) ? n - 1 : 1;
  for (std::size_t j = n - 1; j >= lowest && j >= 1; --j) {
    if (row_left_norm(a, j) < deflation_tol) {
      return {remove_row_col(a, j), {a(j, j)}, j};
    }
  }
  return {a, {}, 0};
}

namespace {

IterationRecord make_record(std::size_t iteration, const ComplexMatrix& active) {
  IterationRecord rec;
  rec.iteration = iteration;
  rec.dimension = active.rows();
  rec.subdiag_norm = subdiagonal_norm(active);
  rec.offdiag_norm = offdiagonal_norm(active);
  return rec;
}

void append_diagonal(std::vector<Complex>& out, const ComplexMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(a(i, i));
}

// Off the real axis, scaled by the last row's coupling.
Complex exceptional_shift(const ComplexMatrix& a) {
  const std::size_t m = a.rows() - 1;
  return a(m, m) + row_left_norm(a, m) * Complex{0.75, 0.4375};
}

// One shifted QR step on the active block, recorded into `rec`.
ComplexMatrix step(const ComplexMatrix& active, const SolverConfig& cfg, std::size_t iteration,
                   IterationRecord& rec, bool exceptional = false) {
  const Complex mu = exceptional ? exceptional_shift(active) : compute_shift(active, cfg.shift);
  const Complex before = trace(active);
  ComplexMatrix next = active;
  try {
    next = qr_step(active, mu, cfg.qr_method);
  } catch (const NumericalBreakdown& e) {
    throw NumericalBreakdown(std::string(e.what()) + " at iteration " + std::to_string(iteration), iteration);
  }
  if (!next.all_finite()) {
    throw NumericalBreakdown("QR iteration produced a non-finite entry at iteration " +
                                 std::to_string(iteration),
                             iteration);
  }
  rec = make_record(iteration, next);
  rec.shift = mu;
  rec.qr_step = true;
  rec.trace_drift = std::abs(trace(next) - before);
  return next;
}

ComplexMatrix prepare(const ComplexMatrix& a, const SolverConfig& cfg) {
  cfg.validate();
  if (!a.is_square()) throw DimensionError("eigen solver: expected a square matrix");
  if (!a.all_finite()) throw NumericalBreakdown("eigen solver: non-finite input", 0);
  return cfg.do_balance ? balance(a).matrix : a;
}

}  // namespace

EigenReport enhanced_shifted_qr(const ComplexMatrix& a, const SolverConfig& cfg) {
  ComplexMatrix active = prepare(a, cfg);
  EigenReport report;
  report.eigenvalues.reserve(a.rows());
  std::size_t stalled = 0;

  for (std::size_t it = 1; it <= cfg.k_max; ++it) {
    report.iterations = it;

    if (active.rows() > 1) {
      DeflationResult d = deflation_sweep(active, cfg.deflation_tol, cfg.deflation_mode);
      if (!d.extracted.empty()) {
        report.eigenvalues.push_back(d.extracted.front());
        ++report.deflations;
        active = std::move(d.matrix);
        stalled = 0;
        IterationRecord rec = make_record(it, active);
        rec.deflated = true;
        report.trace.push_back(rec);
        continue;
      }
    }

    if (active.rows() == 1) {
      report.eigenvalues.push_back(active(0, 0));
      report.trace.push_back(make_record(it, active));
      report.converged = true;
      return report;
    }

    ++stalled;
    const bool exceptional = cfg.exceptional_shift_period > 0 && stalled % cfg.exceptional_shift_period == 0;
    IterationRecord rec;
    active = step(active, cfg, it, rec, exceptional);
    report.trace.push_back(rec);

    if (rec.subdiag_norm < cfg.eps) {
      append_diagonal(report.eigenvalues, active);
      report.converged = true;
      return report;
    }
  }

  append_diagonal(report.eigenvalues, active);
  return report;
}

EigenReport baseline_qr(const ComplexMatrix& a, const SolverConfig& cfg) {
  ComplexMatrix active = prepare(a, cfg);
  EigenReport report;

  if (active.rows() == 1 || subdiagonal_norm(active) < cfg.eps) {
    append_diagonal(report.eigenvalues, active);
    report.converged = true;
    return report;
  }

  for (std::size_t it = 1; it <= cfg.k_max; ++it) {
    report.iterations = it;
    IterationRecord rec;
    active = step(active, cfg, it, rec);
    report.trace.push_back(rec);
    if (rec.subdiag_norm < cfg.eps) {
      report.converged = true;
      break;
    }
  }

  append_diagonal(report.eigenvalues, active);
  return report;
}

std::string_view to_string(DeflationMode mode) {
  return mode == DeflationMode::Paper ? "paper" : "trailing";
}

DeflationMode parse_deflation_mode(std::string_view name) {
  if (name == "paper") return DeflationMode::Paper;
  if (name == "trailing") return DeflationMode::TrailingOnly;
  throw std::invalid_argument("unknown deflation mode '" + std::string(name) + "'");
}

}  // namespace shiftqr
