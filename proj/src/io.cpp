#include "shiftqr/io.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace shiftqr::io {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Full-string strtod; empty or trailing junk is an error.
bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && errno != ERANGE && std::isfinite(out);
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

MatrixFormat format_for(const std::filesystem::path& path) {
  const std::string ext = lower(path.extension().string());
  if (ext == ".mtx" || ext == ".mm") return MatrixFormat::MatrixMarket;
  if (ext == ".csv") return MatrixFormat::Csv;
  throw std::invalid_argument("unrecognized matrix file extension '" + ext + "' (expected .mtx, .mm or .csv)");
}

ComplexMatrix read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) throw ParseError("empty file, expected a %%MatrixMarket header", 1);
  ++line_no;
  std::istringstream header(lower(trim(line)));
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%matrixmarket") throw ParseError("missing %%MatrixMarket banner", line_no);
  if (object != "matrix" || format != "array") {
    throw ParseError("only 'matrix array' Matrix Market files are supported", line_no);
  }
  if (field != "complex" && field != "real") {
    throw ParseError("unsupported field '" + field + "' (expected complex or real)", line_no);
  }
  if (symmetry != "general") throw ParseError("unsupported symmetry '" + symmetry + "'", line_no);
  const bool is_complex = field == "complex";

  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      out = trim(out);
      if (out.empty() || out.front() == '%') continue;
      return true;
    }
    return false;
  };

  if (!next_content_line(line)) throw ParseError("missing size line", line_no + 1);
  std::size_t rows = 0, cols = 0;
  {
    std::istringstream size_line(line);
    long long r = 0, c = 0;
    std::string extra;
    if (!(size_line >> r >> c) || (size_line >> extra) || r < 1 || c < 1) {
      throw ParseError("malformed size line '" + line + "'", line_no);
    }
    rows = static_cast<std::size_t>(r);
    cols = static_cast<std::size_t>(c);
  }

  ComplexMatrix a(rows, cols);
  const std::size_t expected = rows * cols;
  for (std::size_t k = 0; k < expected; ++k) {
    if (!next_content_line(line)) {
      throw ParseError("expected " + std::to_string(expected) + " values, found " + std::to_string(k),
                       line_no + 1);
    }
    std::istringstream values(line);
    std::string re_text, im_text, extra;
    values >> re_text;
    if (is_complex) values >> im_text;
    values >> extra;
    double re = 0.0, im = 0.0;
    if (!parse_double(re_text, re) || (is_complex && !parse_double(im_text, im)) || !extra.empty()) {
      throw ParseError("unparsable value line '" + line + "'", line_no);
    }
    a(k % rows, k / rows) = Complex{re, im};
  }
  if (next_content_line(line)) {
    throw ParseError("more values than the declared " + std::to_string(rows) + "x" + std::to_string(cols),
                     line_no);
  }
  return a;
}

void write_matrix_market(std::ostream& out, const ComplexMatrix& a) {
  out << "%%MatrixMarket matrix array complex general\n";
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      out << format_double(a(i, j).real()) << ' ' << format_double(a(i, j).imag()) << '\n';
}

Complex parse_complex(const std::string& raw) {
  std::string token = trim(raw);
  // Accept the Unicode minus sign as well as '-'.
  for (std::size_t pos; (pos = token.find("\xE2\x88\x92")) != std::string::npos;) token.replace(pos, 3, "-");
  if (token.empty()) throw std::invalid_argument("empty entry");

  auto fail = [&]() -> Complex { throw std::invalid_argument("cannot parse complex entry '" + raw + "'"); };

  if (token.back() != 'i' && token.back() != 'j') {
    double re = 0.0;
    return parse_double(token, re) ? Complex{re, 0.0} : fail();
  }
  token.pop_back();

  // The split is the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = token.size(); k-- > 1;) {
    if ((token[k] == '+' || token[k] == '-') && token[k - 1] != 'e' && token[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](const std::string& s, double& out) {
    if (s.empty() || s == "+" || s == "-") {
      out = (s == "-") ? -1.0 : 1.0;
      return true;
    }
    return parse_double(s, out);
  };

  double re = 0.0, im = 0.0;
  if (split == std::string::npos) {
    return imag_part(token, im) ? Complex{0.0, im} : fail();
  }
  if (!parse_double(token.substr(0, split), re) || !imag_part(token.substr(split), im)) return fail();
  return {re, im};
}

ComplexMatrix read_csv_matrix(std::istream& in) {
  std::vector<Complex> entries;
  std::size_t cols = 0, rows = 0, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<Complex> row;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        row.push_back(parse_complex(field));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no);
      }
    }
    if (!line.empty() && trim(line).back() == ',') throw ParseError("trailing comma", line_no);
    if (rows == 0) {
      cols = row.size();
    } else if (row.size() != cols) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols),
                       line_no);
    }
    entries.insert(entries.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows == 0) throw ParseError("no matrix rows found", line_no + 1);
  return ComplexMatrix(rows, cols, std::move(entries));
}

void write_csv_matrix(std::ostream& out, const ComplexMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ',';
      const Complex z = a(i, j);
      out << format_double(z.real());
      if (z.imag() != 0.0) out << (std::signbit(z.imag()) ? "" : "+") << format_double(z.imag()) << 'i';
    }
    out << '\n';
  }
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
  const MatrixFormat fmt = format_for(path);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  return fmt == MatrixFormat::MatrixMarket ? read_matrix_market(in) : read_csv_matrix(in);
}

void write_matrix(const ComplexMatrix& a, const std::filesystem::path& path) {
  const MatrixFormat fmt = format_for(path);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  if (fmt == MatrixFormat::MatrixMarket) {
    write_matrix_market(out, a);
  } else {
    write_csv_matrix(out, a);
  }
  if (!out.flush()) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace shiftqr::io
