#include "azw/exact_matrix.hpp"

#include <utility>

#include "azw/errors.hpp"

namespace azw {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  auto valid = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false)) throw Error(Errc::ParseError, "not a rational: '" + s + "'");
  Integer p(num[0] == '+' ? num.substr(1) : num, 10);
  Integer q(den, 10);
  if (q == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(Errc::InvalidParameter, "ragged matrix initializer");
    for (const auto& x : row) data_.push_back(x);
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational ExactMatrix::trace() const {
  if (!is_square()) throw Error(Errc::NonSquare, "trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Rational ExactMatrix::row_sum(std::size_t i) const {
  Rational s = 0;
  for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
  return s;
}

Rational ExactMatrix::col_sum(std::size_t j) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j);
  return s;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::InvalidParameter, "shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::InvalidParameter, "shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::InvalidParameter, "shape mismatch in *");
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Rational det_exact(const ExactMatrix& m) {
  if (!m.is_square()) throw Error(Errc::NonSquare, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ExactMatrix a = m;
  Rational sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

ExactMatrix positive_support(const ExactMatrix& m) {
  if (!m.is_square()) throw Error(Errc::NonSquare, "positive support expects a square matrix");
  ExactMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = sgn(m(i, j)) > 0 ? 1 : 0;
  return s;
}

}  // namespace azw
