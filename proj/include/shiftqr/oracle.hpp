#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "shiftqr/matrix.hpp"

// Independent ground truth for small matrices: characteristic polynomial by
// Faddeev-LeVerrier, roots by Durand-Kerner. Nothing here touches the QR path.

namespace shiftqr::oracle {

inline constexpr std::size_t kMaxDimension = 12;

/// Monic p(x) = x^n + c[n-1] x^(n-1) + ... + c[0]; `coefficients` holds c[0..n-1].
struct PolySpec {
  std::vector<Complex> coefficients;

  std::size_t degree() const noexcept { return coefficients.size(); }
  Complex evaluate(Complex x) const;
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, std::vector<Complex> estimates)
      : std::runtime_error(what), estimates_(std::move(estimates)) {}

  const std::vector<Complex>& estimates() const noexcept { return estimates_; }

 private:
  std::vector<Complex> estimates_;
};

/// Throws DimensionError for non-square input or n > kMaxDimension.
PolySpec char_poly(const ComplexMatrix& a);

struct RootOptions {
  double tolerance = 1e-13;
  std::size_t max_sweeps = 1000;
};

/// Throws NonConvergence (carrying the last estimates) when the sweep cap is hit.
std::vector<Complex> poly_roots(const PolySpec& p, RootOptions opts = {});

/// char_poly followed by poly_roots.
std::vector<Complex> eigenvalues(const ComplexMatrix& a);

inline constexpr std::size_t kExactMatchLimit = 8;

/// Bottleneck matching distance between two multisets: the smallest possible
/// maximum pairwise distance over all pairings. Exact (permutation search)
/// up to kExactMatchLimit values; greedy nearest-neighbour above that, which
/// gives an upper bound.
double match_eigenvalues(const std::vector<Complex>& computed, const std::vector<Complex>& reference);

}  // namespace shiftqr::oracle
