#include "shiftqr/qr.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace shiftqr {

namespace {

void check_input(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) throw DimensionError(std::string(op) + ": expected a square matrix");
  if (!a.all_finite()) throw NumericalBreakdown(std::string(op) + ": non-finite input");
}

Complex unit_phase(Complex z) {
  const double m = std::abs(z);
  return m == 0.0 ? Complex{1.0, 0.0} : z / m;
}

// Rotate the phase of each R row so diag(R) is real nonnegative; the
// matching Q column absorbs the conjugate phase, leaving QR unchanged.
void normalize_diagonal(QRFactors& f) {
  const std::size_t n = f.r.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex d = f.r(k, k);
    if (d == Complex{}) continue;
    if (d.imag() == 0.0 && d.real() > 0.0) continue;
    const Complex p = unit_phase(d);
    const Complex pc = std::conj(p);
    for (std::size_t j = k + 1; j < n; ++j) f.r(k, j) *= pc;
    f.r(k, k) = std::abs(d);
    for (std::size_t i = 0; i < n; ++i) f.q(i, k) *= p;
  }
}

}  // namespace

QRFactors householder_qr(const ComplexMatrix& a) {
  check_input(a, "householder_qr");
  const std::size_t n = a.rows();
  QRFactors f{ComplexMatrix::identity(n), a};
  ComplexMatrix& r = f.r;
  ComplexMatrix& q = f.q;
  std::vector<Complex> v(n);

  for (std::size_t k = 0; k + 1 < n; ++k) {
    double tail = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) tail += std::norm(r(i, k));
    if (tail == 0.0) continue;  // column already reduced: identity reflector

    const double alpha = std::sqrt(std::norm(r(k, k)) + tail);
    // v = x + e^{i arg x0} ||x|| e1 avoids cancellation in v[0].
    for (std::size_t i = k; i < n; ++i) v[i] = r(i, k);
    v[k] += unit_phase(r(k, k)) * alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) vnorm2 += std::norm(v[i]);
    const double beta = 2.0 / vnorm2;

    // R <- (I - beta v v^H) R on rows k.., columns k..
    for (std::size_t j = k; j < n; ++j) {
      Complex dot{};
      for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i]) * r(i, j);
      dot *= beta;
      for (std::size_t i = k; i < n; ++i) r(i, j) -= v[i] * dot;
    }
    for (std::size_t i = k + 1; i < n; ++i) r(i, k) = 0.0;

    // Q <- Q (I - beta v v^H)
    for (std::size_t i = 0; i < n; ++i) {
      auto qrow = q.row(i);
      Complex dot{};
      for (std::size_t j = k; j < n; ++j) dot += qrow[j] * v[j];
      dot *= beta;
      for (std::size_t j = k; j < n; ++j) qrow[j] -= dot * std::conj(v[j]);
    }
  }

  normalize_diagonal(f);
  return f;
}

QRFactors givens_qr(const ComplexMatrix& a) {
  check_input(a, "givens_qr");
  const std::size_t n = a.rows();
  QRFactors f{ComplexMatrix::identity(n), a};
  ComplexMatrix& r = f.r;
  ComplexMatrix& q = f.q;

  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex x = r(k, k);
      const Complex y = r(i, k);
      if (y == Complex{}) continue;
      const double rho = std::hypot(std::abs(x), std::abs(y));
      // G = [[conj(x), conj(y)], [-y, x]] / rho sends (x, y) to (rho, 0).
      const Complex g00 = std::conj(x) / rho, g01 = std::conj(y) / rho;
      const Complex g10 = -y / rho, g11 = x / rho;
      for (std::size_t j = k; j < n; ++j) {
        const Complex top = r(k, j);
        const Complex bot = r(i, j);
        r(k, j) = g00 * top + g01 * bot;
        r(i, j) = g10 * top + g11 * bot;
      }
      r(k, k) = rho;
      r(i, k) = 0.0;
      // Q <- Q G^H on columns k and i.
      for (std::size_t row = 0; row < n; ++row) {
        const Complex left = q(row, k);
        const Complex right = q(row, i);
        q(row, k) = left * std::conj(g00) + right * std::conj(g01);
        q(row, i) = left * std::conj(g10) + right * std::conj(g11);
      }
    }
  }

  normalize_diagonal(f);
  return f;
}

QRFactors gram_schmidt_qr(const ComplexMatrix& a, GramSchmidtVariant variant) {
  check_input(a, "gram_schmidt_qr");
  const std::size_t n = a.rows();
  const double threshold = 1e-14 * frobenius_norm(a);
  QRFactors f{ComplexMatrix(n, n), ComplexMatrix(n, n)};
  ComplexMatrix& q = f.q;
  ComplexMatrix& r = f.r;
  std::vector<Complex> v(n);

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) v[i] = a(i, j);
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj{};
      if (variant == GramSchmidtVariant::Classical) {
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * a(i, j);
      } else {
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * v[i];
      }
      r(k, j) = proj;
      for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q(i, k);
    }
    double norm2 = 0.0;
    for (const Complex& z : v) norm2 += std::norm(z);
    const double pivot = std::sqrt(norm2);
    if (pivot <= threshold) {
      throw RankDeficiency("gram_schmidt_qr: column " + std::to_string(j) +
                               " is numerically dependent on the previous ones",
                           j);
    }
    r(j, j) = pivot;
    for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] / pivot;
  }
  return f;
}

QRFactors qr_factorize(const ComplexMatrix& a, QRMethod method) {
  switch (method) {
    case QRMethod::Householder:
      return householder_qr(a);
    case QRMethod::Givens:
      return givens_qr(a);
    case QRMethod::GramSchmidtClassical:
      return gram_schmidt_qr(a, GramSchmidtVariant::Classical);
    case QRMethod::GramSchmidtModified:
      return gram_schmidt_qr(a, GramSchmidtVariant::Modified);
  }
  throw DimensionError("qr_factorize: unknown method");
}

std::string_view to_string(QRMethod method) {
  switch (method) {
    case QRMethod::Householder:
      return "householder";
    case QRMethod::Givens:
      return "givens";
    case QRMethod::GramSchmidtClassical:
      return "cgs";
    case QRMethod::GramSchmidtModified:
      return "mgs";
  }
  return "unknown";
}

QRMethod parse_qr_method(std::string_view name) {
  if (name == "householder") return QRMethod::Householder;
  if (name == "givens") return QRMethod::Givens;
  if (name == "cgs") return QRMethod::GramSchmidtClassical;
  if (name == "mgs") return QRMethod::GramSchmidtModified;
  throw std::invalid_argument("unknown QR method '" + std::string(name) + "'");
}

}  // namespace shiftqr
