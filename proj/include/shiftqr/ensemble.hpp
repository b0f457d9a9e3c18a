#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "shiftqr/matrix.hpp"

namespace shiftqr {

enum class Distribution {
  /// Real entries drawn from N(0, 1).
  StandardNormalReal,
  /// Real and imaginary parts uniform on [-1, 1].
  UniformComplex,
};

struct EnsembleSpec {
  std::size_t dimension = 3;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  Distribution distribution = Distribution::StandardNormalReal;

  void validate() const;
};

/// Deterministic random stream for one matrix of an ensemble.
///
/// The state is a std::mt19937_64 seeded with splitmix64(seed, index), so each
/// matrix index gets an independent stream and the ensemble does not depend on
/// generation order. Uniforms take the top 53 bits of a draw; normals use the
/// Box-Muller transform (no std:: distribution objects, whose output is
/// implementation-defined).
class MatrixStream {
 public:
  MatrixStream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double standard_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

ComplexMatrix random_matrix(std::size_t n, Distribution dist, std::uint64_t seed, std::uint64_t index);

std::vector<ComplexMatrix> generate_ensemble(const EnsembleSpec& spec);

std::string_view to_string(Distribution d);
/// Accepts "normal" and "uniform-complex".
Distribution parse_distribution(std::string_view name);

}  // namespace shiftqr
