#pragma once

#include <cstddef>
#include <vector>

#include "azw/rational.hpp"

namespace azw {

/// Dense row-major matrix of arbitrary-precision rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExactMatrix transpose() const;
  Rational trace() const;
  Rational row_sum(std::size_t i) const;
  Rational col_sum(std::size_t j) const;

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const Rational& scalar);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const Rational& s) { return a *= s; }
  friend ExactMatrix operator*(const Rational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by Bareiss fraction-free elimination with row pivoting.
/// Throws Error(NonSquare).
Rational det_exact(const ExactMatrix& m);

/// Elementwise indicator of strictly positive entries. Throws Error(NonSquare).
ExactMatrix positive_support(const ExactMatrix& m);

}  // namespace azw
