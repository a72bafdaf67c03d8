#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "azw/rational.hpp"

namespace azw {

/// Univariate polynomial over Q in the indeterminate u. Coefficients are
/// stored by ascending power with no trailing zeros; the zero polynomial has
/// no coefficients and degree -1.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Rational> coeffs);
  ExactPolynomial(std::initializer_list<Rational> coeffs) : ExactPolynomial(std::vector<Rational>(coeffs)) {}

  static ExactPolynomial constant(const Rational& c) { return ExactPolynomial({c}); }
  static ExactPolynomial monomial(const Rational& c, int power);
  /// u^n - 1
  static ExactPolynomial cyclic(int n);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of u^k; zero beyond the degree.
  Rational coeff(int k) const;
  const Rational& leading() const;
  /// Multiplicity of u as a factor (0 for nonzero constant term).
  int lowest_power() const;

  Rational operator()(const Rational& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  ExactPolynomial derivative() const;
  ExactPolynomial monic() const;
  /// u^n p(1/u). Requires n >= degree().
  ExactPolynomial reversed(int n) const;
  ExactPolynomial reversed() const { return reversed(degree()); }
  /// Keeps terms of degree < order.
  ExactPolynomial truncated(int order) const;

  ExactPolynomial& operator+=(const ExactPolynomial& rhs);
  ExactPolynomial& operator-=(const ExactPolynomial& rhs);
  ExactPolynomial& operator*=(const Rational& s);
  ExactPolynomial operator-() const;

  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
  friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
  friend ExactPolynomial operator*(ExactPolynomial a, const Rational& s) { return a *= s; }
  friend ExactPolynomial operator*(const Rational& s, ExactPolynomial a) { return a *= s; }
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

ExactPolynomial pow(const ExactPolynomial& p, unsigned exponent);

struct PolynomialDivision {
  ExactPolynomial quotient;
  ExactPolynomial remainder;
};

PolynomialDivision divmod(const ExactPolynomial& a, const ExactPolynomial& b);

/// Divides when b | a exactly, otherwise returns false and leaves `out` alone.
bool divides_exactly(const ExactPolynomial& a, const ExactPolynomial& b, ExactPolynomial& out);

/// Monic gcd; gcd(0, 0) = 0.
ExactPolynomial gcd(ExactPolynomial a, ExactPolynomial b);

/// Reduced quotient num/den over Q: gcd(num, den) = 1 and den is monic, so the
/// sign (and any scalar) is carried by the numerator. This gives each
/// rational function a unique printable form.
class ExactRationalFunction {
 public:
  ExactRationalFunction() : num_(), den_(ExactPolynomial::constant(1)) {}
  ExactRationalFunction(ExactPolynomial num, ExactPolynomial den);
  explicit ExactRationalFunction(ExactPolynomial p) : ExactRationalFunction(std::move(p), ExactPolynomial::constant(1)) {}

  const ExactPolynomial& numerator() const noexcept { return num_; }
  const ExactPolynomial& denominator() const noexcept { return den_; }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  ExactRationalFunction reciprocal() const;
  /// Throws Error(PoleAt) when the denominator vanishes at x to within a
  /// relative 1e-13 of its Horner magnitude.
  std::complex<double> evaluate(std::complex<double> x) const;
  Rational operator()(const Rational& x) const;

  friend ExactRationalFunction operator*(const ExactRationalFunction& a, const ExactRationalFunction& b);
  friend ExactRationalFunction operator/(const ExactRationalFunction& a, const ExactRationalFunction& b);
  friend ExactRationalFunction operator+(const ExactRationalFunction& a, const ExactRationalFunction& b);
  friend ExactRationalFunction operator-(const ExactRationalFunction& a, const ExactRationalFunction& b);
  friend bool operator==(const ExactRationalFunction& a, const ExactRationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  ExactPolynomial num_;
  ExactPolynomial den_;
};

/// p^k for signed k.
ExactRationalFunction pow(const ExactRationalFunction& f, int exponent);

/// Free evaluation wrapper.
inline std::complex<double> rational_function_eval(const ExactRationalFunction& f, std::complex<double> x) {
  return f.evaluate(x);
}

// Truncated formal power series over Q, coefficients by ascending power.
using PowerSeries = std::vector<Rational>;

PowerSeries to_series(const ExactPolynomial& p, int order);
/// 1/p mod u^order. Requires p(0) != 0.
PowerSeries series_inverse(const PowerSeries& p, int order);
PowerSeries series_multiply(const PowerSeries& a, const PowerSeries& b, int order);
/// log(p) mod u^order. Requires p(0) == 1.
PowerSeries series_log(const PowerSeries& p, int order);
/// log f mod u^order for f(0) == 1, computed as log(num/num(0)) - log(den/den(0)).
PowerSeries series_log(const ExactRationalFunction& f, int order);

}  // namespace azw
