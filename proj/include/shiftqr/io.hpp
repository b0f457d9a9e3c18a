#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "shiftqr/matrix.hpp"

namespace shiftqr::io {

enum class MatrixFormat { MatrixMarket, Csv };

/// ".mtx" and ".mm" are Matrix Market; ".csv" is CSV. Anything else throws.
MatrixFormat format_for(const std::filesystem::path& path);

/// Matrix Market array format. The header must name `matrix array` with field
/// `complex` (two values per line) or `real` (one), symmetry `general`.
/// Values are column-major.
ComplexMatrix read_matrix_market(std::istream& in);
void write_matrix_market(std::ostream& out, const ComplexMatrix& a);

/// One row per line, comma separated; entries like `1.5`, `-2i`, `3+4i`, `1e-3-2.5e1i`.
ComplexMatrix read_csv_matrix(std::istream& in);
void write_csv_matrix(std::ostream& out, const ComplexMatrix& a);

/// Parses one CSV entry. Throws std::invalid_argument on malformed text.
Complex parse_complex(const std::string& token);

/// 17 significant digits, enough to round-trip any double exactly.
std::string format_double(double x);

ComplexMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(const ComplexMatrix& a, const std::filesystem::path& path);

}  // namespace shiftqr::io
