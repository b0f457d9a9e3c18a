#include "shiftqr/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <set>
#include <thread>

#include "shiftqr/io.hpp"

namespace shiftqr::bench {

namespace {

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Categorical palette; series beyond its length wrap around.
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

}  // namespace

const std::vector<std::string>& known_solvers() {
  static const std::vector<std::string> names{"enhanced", "plain", "rayleigh", "wilkinson-nodeflate"};
  return names;
}

EigenReport run_solver(const std::string& name, const ComplexMatrix& a, const SolverConfig& base) {
  SolverConfig cfg = base;
  if (name == "enhanced") {
    cfg.shift = ShiftStrategy::Wilkinson;
    return enhanced_shifted_qr(a, cfg);
  }
  cfg.do_balance = false;
  if (name == "wilkinson-nodeflate") {
    cfg.shift = ShiftStrategy::Wilkinson;
  } else if (name == "rayleigh") {
    cfg.shift = ShiftStrategy::Rayleigh;
  } else if (name == "plain") {
    cfg.shift = ShiftStrategy::NoShift;
  } else {
    throw std::invalid_argument("unknown solver '" + name + "'");
  }
  return baseline_qr(a, cfg);
}

const SolverAggregate& ComparisonReport::aggregate(const std::string& solver) const {
  for (const auto& agg : aggregates)
    if (agg.solver == solver) return agg;
  throw std::out_of_range("no aggregate for solver '" + solver + "'");
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

ComparisonReport run_comparison(const std::vector<ComplexMatrix>& matrices,
                                const std::vector<std::string>& solvers, const SolverConfig& base,
                                unsigned jobs) {
  if (solvers.empty()) throw std::invalid_argument("solver list is empty");
  const auto& known = known_solvers();
  for (const auto& s : solvers)
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw std::invalid_argument("unknown solver '" + s + "'");
  base.validate();

  const std::set<std::string> unique(solvers.begin(), solvers.end());
  const std::vector<std::string> names(unique.begin(), unique.end());

  ComparisonReport report;
  report.rows.resize(matrices.size() * names.size());
  for (std::size_t m = 0; m < matrices.size(); ++m)
    for (std::size_t s = 0; s < names.size(); ++s) {
      auto& row = report.rows[m * names.size() + s];
      row.matrix_index = m;
      row.solver = names[s];
    }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < report.rows.size();) {
      ComparisonRow& row = report.rows[k];
      const auto start = std::chrono::steady_clock::now();
      try {
        EigenReport r = run_solver(row.solver, matrices[row.matrix_index], base);
        row.iterations = r.iterations;
        row.converged = r.converged;
        row.deflations = r.deflations;
        row.final_subdiag_norm = r.trace.empty() ? 0.0 : r.trace.back().subdiag_norm;
        row.trace = std::move(r.trace);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(report.rows.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& name : names) {
    SolverAggregate agg;
    agg.solver = name;
    std::vector<double> its;
    std::size_t converged = 0;
    for (const auto& row : report.rows) {
      if (row.solver != name) continue;
      its.push_back(static_cast<double>(row.iterations));
      converged += row.converged ? 1 : 0;
    }
    agg.runs = its.size();
    agg.median_iterations = median(its);
    agg.min_iterations = static_cast<std::size_t>(*std::min_element(its.begin(), its.end()));
    agg.max_iterations = static_cast<std::size_t>(*std::max_element(its.begin(), its.end()));
    agg.convergence_rate = static_cast<double>(converged) / static_cast<double>(agg.runs);
    report.aggregates.push_back(agg);
  }
  return report;
}

ComparisonReport run_comparison(const EnsembleSpec& ensemble, const std::vector<std::string>& solvers,
                                const SolverConfig& base, unsigned jobs) {
  return run_comparison(generate_ensemble(ensemble), solvers, base, jobs);
}

void write_report_csv(std::ostream& out, const ComparisonReport& report) {
  out << "matrix_index,solver,iterations,converged,deflations,final_subdiag_norm,error\n";
  for (const auto& row : report.rows) {
    std::string error = row.error;
    std::replace(error.begin(), error.end(), ',', ';');
    std::replace(error.begin(), error.end(), '\n', ' ');
    out << row.matrix_index << ',' << row.solver << ',' << row.iterations << ',' << (row.converged ? 1 : 0)
        << ',' << row.deflations << ',' << io::format_double(row.final_subdiag_norm) << ',' << error << '\n';
  }
}

void write_timing_csv(std::ostream& out, const ComparisonReport& report) {
  out << "matrix_index,solver,wall_seconds\n";
  for (const auto& row : report.rows)
    out << row.matrix_index << ',' << row.solver << ',' << io::format_double(row.wall_seconds) << '\n';
}

std::vector<TaggedTrace> traces_of(const ComparisonReport& report) {
  std::vector<TaggedTrace> out;
  for (const auto& row : report.rows) out.push_back({row.matrix_index, row.solver, &row.trace});
  return out;
}

void write_trace_csv(std::ostream& out, const std::vector<TaggedTrace>& traces) {
  out << "matrix_index,solver,iteration,dimension,subdiag_norm,shift_re,shift_im,deflated\n";
  for (const auto& t : traces) {
    if (!t.trace) continue;
    for (const auto& rec : *t.trace) {
      out << t.matrix_index << ',' << t.solver << ',' << rec.iteration << ',' << rec.dimension << ','
          << io::format_double(rec.subdiag_norm) << ',' << io::format_double(rec.shift.real()) << ','
          << io::format_double(rec.shift.imag()) << ',' << (rec.deflated ? 1 : 0) << '\n';
    }
  }
}

std::vector<PlotSeries> series_for_matrix(const ComparisonReport& report, std::size_t matrix_index) {
  std::vector<PlotSeries> out;
  for (const auto& row : report.rows)
    if (row.matrix_index == matrix_index) out.push_back({row.solver, row.iterations, row.converged, row.trace});
  return out;
}

void write_convergence_svg(std::ostream& out, const std::vector<PlotSeries>& series, const std::string& title) {
  if (series.empty()) throw std::invalid_argument("write_convergence_svg: no series to plot");

  constexpr double kWidth = 960, kHeight = 420;
  constexpr double kTop = 60, kBottom = 360;  // plot area y-range shared by both panels
  constexpr double kBarLeft = 70, kBarRight = 420;
  constexpr double kLineLeft = 520, kLineRight = 900;

  std::size_t max_iterations = 1;
  std::size_t max_x = 1;
  double lo = 0.0, hi = std::log10(kLogFloor);
  bool any_point = false;
  for (const auto& s : series) {
    max_iterations = std::max(max_iterations, s.iterations);
    for (const auto& rec : s.trace) {
      const double y = std::log10(std::max(rec.subdiag_norm, kLogFloor));
      if (!any_point) lo = hi = y;
      lo = std::min(lo, y);
      hi = std::max(hi, y);
      max_x = std::max(max_x, rec.iteration);
      any_point = true;
    }
  }
  lo = std::floor(lo);
  hi = std::max(std::ceil(hi), lo + 1.0);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << xml_escape(title)
      << "</text>\n";

  // Left panel: iterations per solver.
  out << "<g id=\"iterations\">\n";
  out << "<text x=\"" << (kBarLeft + kBarRight) / 2 << "\" y=\"48\" text-anchor=\"middle\">Iterations required</text>\n";
  out << "<line x1=\"" << kBarLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kBarRight << "\" y2=\"" << kBottom
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kBarLeft << "\" y1=\"" << kTop << "\" x2=\"" << kBarLeft << "\" y2=\"" << kBottom
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kBarLeft - 6 << "\" y=\"" << kTop + 4 << "\" text-anchor=\"end\">" << max_iterations
      << "</text>\n";
  out << "<text x=\"" << kBarLeft - 6 << "\" y=\"" << kBottom + 4 << "\" text-anchor=\"end\">0</text>\n";
  const double slot = (kBarRight - kBarLeft) / static_cast<double>(series.size());
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const double h = (kBottom - kTop) * static_cast<double>(s.iterations) / static_cast<double>(max_iterations);
    const double x = kBarLeft + slot * (static_cast<double>(k) + 0.15);
    out << "<rect class=\"bar\" x=\"" << fixed(x, 2) << "\" y=\"" << fixed(kBottom - h, 2) << "\" width=\""
        << fixed(slot * 0.7, 2) << "\" height=\"" << fixed(h, 2) << "\" fill=\"" << kColors[k % std::size(kColors)]
        << "\"/>\n";
    out << "<text x=\"" << fixed(x + slot * 0.35, 2) << "\" y=\"" << fixed(kBottom - h - 4, 2)
        << "\" text-anchor=\"middle\">" << s.iterations << (s.converged ? "" : "*") << "</text>\n";
    out << "<text x=\"" << fixed(x + slot * 0.35, 2) << "\" y=\"" << kBottom + 16
        << "\" text-anchor=\"middle\" font-size=\"10\">" << xml_escape(s.label) << "</text>\n";
  }
  out << "</g>\n";

  // Right panel: log10 subdiagonal norm against iteration.
  out << "<g id=\"convergence\">\n";
  out << "<text x=\"" << (kLineLeft + kLineRight) / 2
      << "\" y=\"48\" text-anchor=\"middle\">Subdiagonal norm (log10)</text>\n";
  out << "<line x1=\"" << kLineLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kLineRight << "\" y2=\"" << kBottom
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLineLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLineLeft << "\" y2=\"" << kBottom
      << "\" stroke=\"black\"/>\n";
  auto sx = [&](double it) { return kLineLeft + (kLineRight - kLineLeft) * it / static_cast<double>(max_x); };
  auto sy = [&](double y) { return kBottom - (kBottom - kTop) * (y - lo) / (hi - lo); };
  for (double tick = lo; tick <= hi; tick += std::max(1.0, std::ceil((hi - lo) / 8.0))) {
    out << "<text x=\"" << kLineLeft - 6 << "\" y=\"" << fixed(sy(tick) + 4, 2) << "\" text-anchor=\"end\">1e"
        << static_cast<int>(tick) << "</text>\n";
  }
  out << "<text x=\"" << kLineRight << "\" y=\"" << kBottom + 16 << "\" text-anchor=\"end\">" << max_x << "</text>\n";
  out << "<text x=\"" << (kLineLeft + kLineRight) / 2 << "\" y=\"" << kBottom + 32
      << "\" text-anchor=\"middle\">iteration</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    out << "<polyline class=\"series\" data-label=\"" << xml_escape(s.label) << "\" fill=\"none\" stroke=\""
        << kColors[k % std::size(kColors)] << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& rec : s.trace) {
      const double y = std::log10(std::max(rec.subdiag_norm, kLogFloor));
      out << (first ? "" : " ") << fixed(sx(static_cast<double>(rec.iteration)), 2) << ','
          << fixed(sy(y), 2);
      first = false;
    }
    out << "\"/>\n";
    const double ly = kTop + 16.0 * static_cast<double>(k);
    out << "<rect x=\"" << kLineRight - 150 << "\" y=\"" << fixed(ly - 9, 2) << "\" width=\"10\" height=\"10\" fill=\""
        << kColors[k % std::size(kColors)] << "\"/>\n";
    out << "<text class=\"legend\" x=\"" << kLineRight - 135 << "\" y=\"" << fixed(ly, 2) << "\">"
        << xml_escape(s.label) << "</text>\n";
  }
  out << "</g>\n";
  out << "</svg>\n";
}

}  // namespace shiftqr::bench
