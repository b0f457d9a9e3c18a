#include "shiftqr/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace shiftqr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

void EnsembleSpec::validate() const {
  if (count < 1) throw std::invalid_argument("ensemble count must be >= 1");
  if (dimension < 2) throw std::invalid_argument("ensemble dimension must be >= 2");
}

MatrixStream::MatrixStream(std::uint64_t seed, std::uint64_t index)
    : engine_(splitmix64(splitmix64(seed) ^ index)) {}

std::uint64_t MatrixStream::next_u64() { return engine_(); }

double MatrixStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double MatrixStream::standard_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

ComplexMatrix random_matrix(std::size_t n, Distribution dist, std::uint64_t seed, std::uint64_t index) {
  MatrixStream stream(seed, index);
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (dist == Distribution::StandardNormalReal) {
        a(i, j) = stream.standard_normal();
      } else {
        const double re = stream.uniform(-1.0, 1.0);
        const double im = stream.uniform(-1.0, 1.0);
        a(i, j) = Complex{re, im};
      }
    }
  return a;
}

std::vector<ComplexMatrix> generate_ensemble(const EnsembleSpec& spec) {
  spec.validate();
  std::vector<ComplexMatrix> out;
  out.reserve(spec.count);
  for (std::size_t k = 0; k < spec.count; ++k)
    out.push_back(random_matrix(spec.dimension, spec.distribution, spec.seed, k));
  return out;
}

std::string_view to_string(Distribution d) {
  return d == Distribution::StandardNormalReal ? "normal" : "uniform-complex";
}

Distribution parse_distribution(std::string_view name) {
  if (name == "normal") return Distribution::StandardNormalReal;
  if (name == "uniform-complex") return Distribution::UniformComplex;
  throw std::invalid_argument("unknown distribution '" + std::string(name) + "'");
}

}  // namespace shiftqr
