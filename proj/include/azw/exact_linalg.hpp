#pragma once

#include <vector>

#include "azw/exact_matrix.hpp"
#include "azw/polynomial.hpp"

namespace azw {

/// det(I - u M) = prod (1 - lambda_k u), via Faddeev-LeVerrier over Q.
/// Constant term is always 1. Throws Error(NonSquare).
ExactPolynomial reversed_charpoly(const ExactMatrix& m);

/// det(lambda I - M), monic of degree N.
ExactPolynomial charpoly(const ExactMatrix& m);

/// Square matrix with polynomial entries, row-major.
class PolynomialMatrix {
 public:
  explicit PolynomialMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  /// a * I + b * M, the shape used by every determinant identity here.
  static PolynomialMatrix affine(const ExactPolynomial& a, const ExactPolynomial& b, const ExactMatrix& m);

  std::size_t size() const noexcept { return n_; }
  ExactPolynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const ExactPolynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  /// Sum over rows of the largest entry degree in that row.
  int degree_bound() const;
  ExactMatrix evaluate(const Rational& x) const;

 private:
  std::size_t n_;
  std::vector<ExactPolynomial> entries_;
};

/// Exact determinant by evaluating at the degree_bound + 1 integer points
/// first_point, first_point + 1, ... and interpolating (Newton form).
/// The result does not depend on first_point.
ExactPolynomial poly_matrix_det(const PolynomialMatrix& m, int first_point = 0);

/// Exact interpolating polynomial through (xs[i], ys[i]); xs distinct.
ExactPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace azw
