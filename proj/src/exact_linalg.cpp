#include "azw/exact_linalg.hpp"

#include <algorithm>

#include "azw/errors.hpp"

namespace azw {

namespace {

// Coefficients c_0 = 1, c_1, ..., c_N of det(lambda I - M) = sum c_k lambda^{N-k}.
std::vector<Rational> faddeev_leverrier(const ExactMatrix& m) {
  if (!m.is_square()) throw Error(Errc::NonSquare, "characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  ExactMatrix acc(n, n);  // M_k, starting from M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k - 1];
    acc = m * acc;
    c[k] = -acc.trace() / static_cast<long>(k);
  }
  return c;
}

}  // namespace

ExactPolynomial reversed_charpoly(const ExactMatrix& m) { return ExactPolynomial(faddeev_leverrier(m)); }

ExactPolynomial charpoly(const ExactMatrix& m) {
  std::vector<Rational> c = faddeev_leverrier(m);
  std::reverse(c.begin(), c.end());
  return ExactPolynomial(std::move(c));
}

PolynomialMatrix PolynomialMatrix::affine(const ExactPolynomial& a, const ExactPolynomial& b, const ExactMatrix& m) {
  if (!m.is_square()) throw Error(Errc::NonSquare, "affine polynomial matrix needs a square matrix");
  PolynomialMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = b * m(i, j);
      if (i == j) out(i, j) += a;
    }
  }
  return out;
}

int PolynomialMatrix::degree_bound() const {
  int bound = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    int row = 0;
    for (std::size_t j = 0; j < n_; ++j) row = std::max(row, (*this)(i, j).degree());
    bound += row;
  }
  return bound;
}

ExactMatrix PolynomialMatrix::evaluate(const Rational& x) const {
  ExactMatrix out(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(i, j)(x);
  return out;
}

ExactPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw Error(Errc::InvalidParameter, "interpolation size mismatch");
  const std::size_t n = xs.size();
  // divided differences in place
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational span = xs[i] - xs[i - level];
      if (sgn(span) == 0) throw Error(Errc::InvalidParameter, "interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  }
  // Horner on the Newton form
  ExactPolynomial p;
  for (std::size_t k = n; k-- > 0;) {
    p = p * ExactPolynomial({-xs[k], Rational(1)}) + ExactPolynomial::constant(dd[k]);
  }
  return p;
}

ExactPolynomial poly_matrix_det(const PolynomialMatrix& m, int first_point) {
  const int bound = m.degree_bound();
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  xs.reserve(static_cast<std::size_t>(bound) + 1);
  ys.reserve(static_cast<std::size_t>(bound) + 1);
  for (int k = 0; k <= bound; ++k) {
    Rational x = first_point + k;
    ys.push_back(det_exact(m.evaluate(x)));
    xs.push_back(std::move(x));
  }
  return interpolate(xs, ys);
}

}  // namespace azw
