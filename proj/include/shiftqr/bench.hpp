#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "shiftqr/ensemble.hpp"
#include "shiftqr/solver.hpp"

namespace shiftqr::bench {

/// Solver names accepted by run_comparison, in sorted order.
const std::vector<std::string>& known_solvers();

/// Runs one named solver. "enhanced" uses the Wilkinson shift with deflation
/// and honours base.do_balance; "wilkinson-nodeflate", "rayleigh" and "plain"
/// run baseline_qr without balancing. Tolerances, k_max and the QR kernel
/// come from `base`.
EigenReport run_solver(const std::string& name, const ComplexMatrix& a, const SolverConfig& base);

struct ComparisonRow {
  std::size_t matrix_index = 0;
  std::string solver;
  std::size_t iterations = 0;
  bool converged = false;
  std::size_t deflations = 0;
  double final_subdiag_norm = 0.0;
  double wall_seconds = 0.0;
  /// Empty unless the solver threw.
  std::string error;
  IterationTrace trace;
};

struct SolverAggregate {
  std::string solver;
  std::size_t runs = 0;
  double median_iterations = 0.0;
  std::size_t min_iterations = 0;
  std::size_t max_iterations = 0;
  double convergence_rate = 0.0;
};

struct ComparisonReport {
  /// Sorted by (matrix_index, solver).
  std::vector<ComparisonRow> rows;
  /// Sorted by solver name.
  std::vector<SolverAggregate> aggregates;

  const SolverAggregate& aggregate(const std::string& solver) const;
};

/// Throws std::invalid_argument for an empty or unknown solver list. Solver
/// exceptions are caught and stored in the row. `jobs` > 1 runs cells on
/// worker threads; the result does not depend on it.
ComparisonReport run_comparison(const std::vector<ComplexMatrix>& matrices,
                                const std::vector<std::string>& solvers, const SolverConfig& base,
                                unsigned jobs = 1);

ComparisonReport run_comparison(const EnsembleSpec& ensemble, const std::vector<std::string>& solvers,
                                const SolverConfig& base, unsigned jobs = 1);

double median(std::vector<double> values);

/// Per-run results without timing, so identical inputs give identical bytes.
void write_report_csv(std::ostream& out, const ComparisonReport& report);
/// matrix_index,solver,wall_seconds
void write_timing_csv(std::ostream& out, const ComparisonReport& report);

/// One trace tagged with the matrix and solver it came from.
struct TaggedTrace {
  std::size_t matrix_index = 0;
  std::string solver;
  const IterationTrace* trace = nullptr;
};

/// Header plus one row per iteration record:
/// matrix_index,solver,iteration,dimension,subdiag_norm,shift_re,shift_im,deflated
void write_trace_csv(std::ostream& out, const std::vector<TaggedTrace>& traces);
std::vector<TaggedTrace> traces_of(const ComparisonReport& report);

inline constexpr double kLogFloor = 1e-16;

struct PlotSeries {
  std::string label;
  std::size_t iterations = 0;
  bool converged = false;
  IterationTrace trace;
};

/// Two panels: a bar chart of iteration counts and log10-scaled polylines of
/// the subdiagonal norm per series. Norms below kLogFloor are drawn at the floor.
void write_convergence_svg(std::ostream& out, const std::vector<PlotSeries>& series,
                           const std::string& title);

/// Plot series for one matrix of a report, in solver order.
std::vector<PlotSeries> series_for_matrix(const ComparisonReport& report, std::size_t matrix_index);

/// Opens `path` for writing, runs `body`, and checks the stream afterwards.
template <typename Body>
void write_file(const std::filesystem::path& path, Body&& body);

}  // namespace shiftqr::bench

#include <fstream>
#include <stdexcept>

template <typename Body>
void shiftqr::bench::write_file(const std::filesystem::path& path, Body&& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  body(out);
  if (!out.flush()) throw std::runtime_error("write to '" + path.string() + "' failed");
}
