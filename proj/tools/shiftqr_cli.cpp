// shiftqr command line: factor, eig, oracle and bench subcommands.
//
// Exit codes: 0 success, 1 usage, 2 input/parse, 3 numerical breakdown,
// 4 non-convergence (eig --strict only).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shiftqr/bench.hpp"
#include "shiftqr/io.hpp"
#include "shiftqr/oracle.hpp"
#include "shiftqr/qr.hpp"
#include "shiftqr/solver.hpp"

namespace {

using namespace shiftqr;

enum ExitCode : int { kOk = 0, kUsage = 1, kInput = 2, kNumerical = 3, kNotConverged = 4 };

constexpr const char* kSeedEnv = "SHIFTQR_SEED";

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.15g %c %.15gi", z.real(), std::signbit(z.imag()) ? '-' : '+',
                std::abs(z.imag()));
  return buf;
}

struct SolverFlags {
  std::string shift = "wilkinson";
  std::string method = "householder";
  std::string mode = "paper";
  bool no_deflate = false;
  bool no_balance = false;
  double eps = 1e-10;
  double dtol = 1e-12;
  std::size_t kmax = 1000;
  std::size_t exceptional = 10;

  void attach(CLI::App& cmd, bool with_shift) {
    if (with_shift) {
      cmd.add_option("--shift", shift, "Shift strategy")
          ->check(CLI::IsMember({"none", "rayleigh", "wilkinson"}))
          ->capture_default_str();
      cmd.add_flag("--no-deflate", no_deflate, "Run the shifted iteration without deflation");
    }
    cmd.add_flag("--no-balance", no_balance, "Skip the balancing step");
    cmd.add_option("--eps", eps, "Convergence tolerance on the subdiagonal norm")->capture_default_str();
    cmd.add_option("--dtol", dtol, "Deflation tolerance")->capture_default_str();
    cmd.add_option("--kmax", kmax, "Maximum outer iterations")->capture_default_str();
    cmd.add_option("--exceptional", exceptional, "Stalled steps before a complex exceptional shift (0 = never)")
        ->capture_default_str();
    cmd.add_option("--mode", mode, "Deflation scan")
        ->check(CLI::IsMember({"paper", "trailing"}))
        ->capture_default_str();
    cmd.add_option("--method", method, "QR kernel")
        ->check(CLI::IsMember({"householder", "givens", "cgs", "mgs"}))
        ->capture_default_str();
  }

  SolverConfig config() const {
    SolverConfig cfg;
    cfg.k_max = kmax;
    cfg.eps = eps;
    cfg.deflation_tol = dtol;
    cfg.shift = parse_shift_strategy(shift);
    cfg.qr_method = parse_qr_method(method);
    cfg.deflation_mode = parse_deflation_mode(mode);
    cfg.do_balance = !no_balance;
    cfg.exceptional_shift_period = exceptional;
    return cfg;
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  for (char c : s + ",") {
    if (c == ',') {
      if (!item.empty()) out.push_back(item);
      item.clear();
    } else if (c != ' ') {
      item += c;
    }
  }
  return out;
}

int cmd_factor(const std::string& file, const std::string& method) {
  const ComplexMatrix a = io::read_matrix(file);
  const QRFactors f = qr_factorize(a, parse_qr_method(method));
  const std::size_t n = a.rows();
  const double recon = frobenius_norm(matmul(f.q, f.r) - a);
  const double ortho = frobenius_norm(matmul(conjugate_transpose(f.q), f.q) - ComplexMatrix::identity(n));
  std::cout << "method: " << method << "\n";
  std::cout << "n: " << n << "\n";
  std::cout << "||QR - A||_F: " << io::format_double(recon) << "\n";
  std::cout << "||Q^H Q - I||_F: " << io::format_double(ortho) << "\n";
  std::cout << "||A||_F: " << io::format_double(frobenius_norm(a)) << "\n";
  return kOk;
}

EigenReport solve(const ComplexMatrix& a, const SolverFlags& flags) {
  SolverConfig cfg = flags.config();
  if (flags.no_deflate) {
    return baseline_qr(a, cfg);
  }
  return enhanced_shifted_qr(a, cfg);
}

int cmd_eig(const std::string& file, const SolverFlags& flags, const std::string& trace_path, bool strict) {
  const ComplexMatrix a = io::read_matrix(file);
  const EigenReport r = solve(a, flags);
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k)
    std::cout << "lambda[" << k << "] = " << format_complex(r.eigenvalues[k]) << "\n";
  std::cout << "converged: " << (r.converged ? "yes" : "no") << "\n";
  std::cout << "iterations: " << r.iterations << "\n";
  std::cout << "deflations: " << r.deflations << "\n";
  if (!r.trace.empty())
    std::cout << "final subdiagonal norm: " << io::format_double(r.trace.back().subdiag_norm) << "\n";
  if (!trace_path.empty()) {
    const std::string solver = flags.no_deflate ? "baseline-" + flags.shift : "enhanced";
    bench::write_file(trace_path, [&](std::ostream& out) { bench::write_trace_csv(out, {{0, solver, &r.trace}}); });
  }
  return (strict && !r.converged) ? kNotConverged : kOk;
}

int cmd_oracle(const std::string& file, const SolverFlags& flags) {
  const ComplexMatrix a = io::read_matrix(file);
  const std::vector<Complex> reference = oracle::eigenvalues(a);
  for (std::size_t k = 0; k < reference.size(); ++k)
    std::cout << "oracle[" << k << "] = " << format_complex(reference[k]) << "\n";
  const EigenReport r = solve(a, flags);
  std::cout << "eig converged: " << (r.converged ? "yes" : "no") << "\n";
  std::cout << "match distance: " << io::format_double(oracle::match_eigenvalues(r.eigenvalues, reference))
            << "\n";
  return kOk;
}

struct BenchFlags {
  std::size_t dim = 3;
  std::size_t count = 1;
  std::optional<std::uint64_t> seed;
  std::string dist = "normal";
  std::string solvers;
  std::string out;
  std::string svg;
  std::string trace;
  std::string timing;
  unsigned jobs = 1;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kSeedEnv); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw std::invalid_argument(std::string(kSeedEnv) + " is not an unsigned integer");
    return v;
  }
  return 0;
}

int cmd_bench(const BenchFlags& flags, const SolverFlags& solver_flags) {
  EnsembleSpec spec;
  spec.dimension = flags.dim;
  spec.count = flags.count;
  spec.seed = resolve_seed(flags.seed);
  spec.distribution = parse_distribution(flags.dist);

  const auto solvers = split_list(flags.solvers);
  const bench::ComparisonReport report = bench::run_comparison(spec, solvers, solver_flags.config(), flags.jobs);

  bench::write_file(flags.out, [&](std::ostream& o) { bench::write_report_csv(o, report); });
  if (!flags.trace.empty())
    bench::write_file(flags.trace, [&](std::ostream& o) { bench::write_trace_csv(o, bench::traces_of(report)); });
  if (!flags.timing.empty())
    bench::write_file(flags.timing, [&](std::ostream& o) { bench::write_timing_csv(o, report); });
  if (!flags.svg.empty()) {
    const std::string title = std::to_string(flags.dim) + "x" + std::to_string(flags.dim) + " " +
                              std::string(to_string(spec.distribution)) + " matrix 0 (seed " +
                              std::to_string(spec.seed) + ")";
    bench::write_file(flags.svg, [&](std::ostream& o) {
      bench::write_convergence_svg(o, bench::series_for_matrix(report, 0), title);
    });
  }

  std::cout << "seed: " << spec.seed << "\n";
  std::cout << "solver,runs,median_iterations,min_iterations,max_iterations,convergence_rate\n";
  for (const auto& agg : report.aggregates) {
    std::cout << agg.solver << ',' << agg.runs << ',' << agg.median_iterations << ',' << agg.min_iterations << ','
              << agg.max_iterations << ',' << agg.convergence_rate << "\n";
  }
  std::size_t failures = 0;
  for (const auto& row : report.rows)
    if (!row.error.empty()) ++failures;
  if (failures) std::cerr << failures << " solver run(s) failed; see the error column\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shifted QR eigenvalue toolkit"};
  app.require_subcommand(1);

  std::string file;
  std::string method = "householder";
  auto* factor = app.add_subcommand("factor", "QR-factor a matrix and print residuals");
  factor->add_option("file", file, "Matrix file (.mtx or .csv)")->required();
  factor->add_option("--method", method, "QR kernel")
      ->check(CLI::IsMember({"householder", "givens", "cgs", "mgs"}))
      ->capture_default_str();

  SolverFlags eig_flags;
  std::string trace_path;
  bool strict = false;
  auto* eig = app.add_subcommand("eig", "Compute eigenvalues with the shifted QR iteration");
  eig->add_option("file", file, "Matrix file (.mtx or .csv)")->required();
  eig_flags.attach(*eig, true);
  eig->add_option("--trace", trace_path, "Write the iteration trace as CSV");
  eig->add_flag("--strict", strict, "Exit with code 4 when the iteration does not converge");

  SolverFlags oracle_flags;
  auto* orc = app.add_subcommand("oracle", "Characteristic-polynomial eigenvalues (n <= 12) and match distance");
  orc->add_option("file", file, "Matrix file (.mtx or .csv)")->required();
  oracle_flags.attach(*orc, true);

  BenchFlags bench_flags;
  SolverFlags bench_solver_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Compare solvers over a seeded random ensemble");
  bench_cmd->add_option("--dim", bench_flags.dim, "Matrix dimension")->required();
  bench_cmd->add_option("--count", bench_flags.count, "Number of matrices")->required();
  bench_cmd->add_option("--seed", bench_flags.seed,
                        std::string("Ensemble seed (default: $") + kSeedEnv + ", else 0)");
  bench_cmd->add_option("--dist", bench_flags.dist, "Entry distribution")
      ->check(CLI::IsMember({"normal", "uniform-complex"}))
      ->capture_default_str();
  bench_cmd->add_option("--solvers", bench_flags.solvers, "Comma-separated: enhanced,wilkinson-nodeflate,rayleigh,plain")
      ->required();
  bench_cmd->add_option("--out", bench_flags.out, "Report CSV")->required();
  bench_cmd->add_option("--svg", bench_flags.svg, "Convergence plot for matrix 0");
  bench_cmd->add_option("--trace", bench_flags.trace, "Trace CSV for every run");
  bench_cmd->add_option("--timing", bench_flags.timing, "Wall-time CSV");
  bench_cmd->add_option("--jobs", bench_flags.jobs, "Worker threads")->capture_default_str();
  bench_solver_flags.attach(*bench_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*factor) return cmd_factor(file, method);
    if (*eig) return cmd_eig(file, eig_flags, trace_path, strict);
    if (*orc) return cmd_oracle(file, oracle_flags);
    if (*bench_cmd) return cmd_bench(bench_flags, bench_solver_flags);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const NumericalBreakdown& e) {
    std::cerr << "numerical breakdown: " << e.what() << "\n";
    return kNumerical;
  } catch (const RankDeficiency& e) {
    std::cerr << "numerical breakdown: " << e.what() << "\n";
    return kNumerical;
  } catch (const oracle::NonConvergence& e) {
    std::cerr << "numerical breakdown: " << e.what() << "\n";
    return kNumerical;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}
