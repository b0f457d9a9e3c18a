#include "shiftqr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace shiftqr::oracle {

namespace {

using Dense = std::vector<Complex>;  // n*n row-major scratch

Dense product(const Dense& x, const Dense& y, std::size_t n) {
  Dense out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex xik = x[i * n + k];
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += xik * y[k * n + j];
    }
  return out;
}

Complex dense_trace(const Dense& x, std::size_t n) {
  Complex t{};
  for (std::size_t i = 0; i < n; ++i) t += x[i * n + i];
  return t;
}

}  // namespace

Complex PolySpec::evaluate(Complex x) const {
  Complex acc{1.0, 0.0};
  for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * x + coefficients[k];
  return acc;
}

PolySpec char_poly(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("char_poly: expected a square matrix");
  const std::size_t n = a.rows();
  if (n > kMaxDimension) {
    throw DimensionError("char_poly: dimension " + std::to_string(n) + " exceeds the oracle limit of " +
                         std::to_string(kMaxDimension));
  }
  const Dense base(a.data().begin(), a.data().end());

  PolySpec p;
  p.coefficients.assign(n, Complex{});
  // M_1 = A, c_{n-1} = -tr(M_1); M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k) / k.
  Dense m = base;
  p.coefficients[n - 1] = -dense_trace(m, n);
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += p.coefficients[n - k + 1];
    m = product(base, m, n);
    p.coefficients[n - k] = -dense_trace(m, n) / static_cast<double>(k);
  }
  return p;
}

std::vector<Complex> poly_roots(const PolySpec& p, RootOptions opts) {
  const std::size_t n = p.degree();
  if (n == 0) throw DimensionError("poly_roots: degree must be >= 1");

  std::vector<Complex> z(n);
  const Complex seed{0.4, 0.9};
  Complex power{1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = power;
    power *= seed;
  }

  for (std::size_t sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    double largest_update = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex denom{1.0, 0.0};
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) denom *= (z[k] - z[j]);
      const Complex update = p.evaluate(z[k]) / denom;
      if (!std::isfinite(update.real()) || !std::isfinite(update.imag())) {
        throw NonConvergence("poly_roots: Durand-Kerner produced a non-finite update", z);
      }
      z[k] -= update;
      largest_update = std::max(largest_update, std::abs(update));
    }
    if (largest_update < opts.tolerance) return z;
  }
  throw NonConvergence("poly_roots: no convergence after " + std::to_string(opts.max_sweeps) + " sweeps", z);
}

std::vector<Complex> eigenvalues(const ComplexMatrix& a) { return poly_roots(char_poly(a)); }

double match_eigenvalues(const std::vector<Complex>& computed, const std::vector<Complex>& reference) {
  const std::size_t n = computed.size();
  if (reference.size() != n) {
    throw DimensionError("match_eigenvalues: cardinality mismatch (" + std::to_string(n) + " vs " +
                         std::to_string(reference.size()) + ")");
  }
  if (n == 0) return 0.0;

  if (n <= kExactMatchLimit) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
      double worst = 0.0;
      for (std::size_t i = 0; i < n && worst < best; ++i)
        worst = std::max(worst, std::abs(computed[i] - reference[perm[i]]));
      best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  std::vector<Complex> pool = reference;
  double worst = 0.0;
  for (const Complex& c : computed) {
    auto nearest = std::min_element(pool.begin(), pool.end(), [&](const Complex& x, const Complex& y) {
      return std::abs(c - x) < std::abs(c - y);
    });
    worst = std::max(worst, std::abs(c - *nearest));
    pool.erase(nearest);
  }
  return worst;
}

}  // namespace shiftqr::oracle
