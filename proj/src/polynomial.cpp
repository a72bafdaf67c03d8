#include "azw/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "azw/errors.hpp"

namespace azw {

ExactPolynomial::ExactPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

void ExactPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

ExactPolynomial ExactPolynomial::monomial(const Rational& c, int power) {
  if (power < 0) throw Error(Errc::InvalidParameter, "negative monomial power");
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return ExactPolynomial(std::move(v));
}

ExactPolynomial ExactPolynomial::cyclic(int n) {
  if (n < 1) throw Error(Errc::InvalidParameter, "u^n - 1 needs n >= 1");
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  v.front() = -1;
  v.back() = 1;
  return ExactPolynomial(std::move(v));
}

Rational ExactPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& ExactPolynomial::leading() const {
  if (is_zero()) throw Error(Errc::DomainError, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

int ExactPolynomial::lowest_power() const {
  if (is_zero()) throw Error(Errc::DomainError, "lowest power of zero polynomial");
  int k = 0;
  while (sgn(coeffs_[static_cast<std::size_t>(k)]) == 0) ++k;
  return k;
}

Rational ExactPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> ExactPolynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return ExactPolynomial(std::move(d));
}

ExactPolynomial ExactPolynomial::monic() const {
  if (is_zero()) return {};
  const Rational lead = leading();
  ExactPolynomial p = *this;
  for (auto& c : p.coeffs_) c /= lead;
  return p;
}

ExactPolynomial ExactPolynomial::reversed(int n) const {
  if (n < degree()) throw Error(Errc::InvalidParameter, "reversal length below degree");
  if (is_zero()) return {};
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= degree(); ++k) r[static_cast<std::size_t>(n - k)] = coeffs_[static_cast<std::size_t>(k)];
  return ExactPolynomial(std::move(r));
}

ExactPolynomial ExactPolynomial::truncated(int order) const {
  if (order <= 0) return {};
  if (order > degree()) return *this;
  return ExactPolynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order));
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

ExactPolynomial ExactPolynomial::operator-() const {
  ExactPolynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ExactPolynomial(std::move(c));
}

ExactPolynomial pow(const ExactPolynomial& p, unsigned exponent) {
  ExactPolynomial result = ExactPolynomial::constant(1);
  ExactPolynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

PolynomialDivision divmod(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (b.is_zero()) throw Error(Errc::DomainError, "polynomial division by zero");
  if (a.degree() < b.degree()) return {ExactPolynomial(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational& lead = b.leading();
  const auto& bc = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + b.degree());
    if (sgn(rem[top]) == 0) continue;
    Rational q = rem[top] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
  }
  rem.resize(static_cast<std::size_t>(b.degree()));
  return {ExactPolynomial(std::move(quot)), ExactPolynomial(std::move(rem))};
}

bool divides_exactly(const ExactPolynomial& a, const ExactPolynomial& b, ExactPolynomial& out) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return false;
  out = std::move(q);
  return true;
}

ExactPolynomial gcd(ExactPolynomial a, ExactPolynomial b) {
  while (!b.is_zero()) {
    ExactPolynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExactRationalFunction::ExactRationalFunction(ExactPolynomial num, ExactPolynomial den) {
  if (den.is_zero()) throw Error(Errc::DomainError, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = {};
    den_ = ExactPolynomial::constant(1);
    return;
  }
  ExactPolynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).quotient;
    den = divmod(den, g).quotient;
  }
  const Rational lead = den.leading();
  num_ = num * (1 / lead);
  den_ = den * (1 / lead);
}

ExactRationalFunction ExactRationalFunction::reciprocal() const {
  if (num_.is_zero()) throw Error(Errc::DomainError, "reciprocal of zero rational function");
  return ExactRationalFunction(den_, num_);
}

std::complex<double> ExactRationalFunction::evaluate(std::complex<double> x) const {
  const std::complex<double> d = den_.evaluate(x);
  double scale = 0.0;
  double power = 1.0;
  for (const auto& c : den_.coeffs()) {
    scale += std::abs(c.get_d()) * power;
    power *= std::abs(x);
  }
  if (std::abs(d) <= 1e-13 * scale) {
    throw Error(Errc::PoleAt, "denominator vanishes at (" + std::to_string(x.real()) + "," +
                                  std::to_string(x.imag()) + ")");
  }
  return num_.evaluate(x) / d;
}

Rational ExactRationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (sgn(d) == 0) throw Error(Errc::PoleAt, "denominator vanishes at " + to_string(x));
  return num_(x) / d;
}

ExactRationalFunction operator*(const ExactRationalFunction& a, const ExactRationalFunction& b) {
  return ExactRationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

ExactRationalFunction operator/(const ExactRationalFunction& a, const ExactRationalFunction& b) {
  return a * b.reciprocal();
}

ExactRationalFunction operator+(const ExactRationalFunction& a, const ExactRationalFunction& b) {
  return ExactRationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExactRationalFunction operator-(const ExactRationalFunction& a, const ExactRationalFunction& b) {
  return ExactRationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ExactRationalFunction pow(const ExactRationalFunction& f, int exponent) {
  if (exponent >= 0) {
    return ExactRationalFunction(pow(f.numerator(), static_cast<unsigned>(exponent)),
                                 pow(f.denominator(), static_cast<unsigned>(exponent)));
  }
  return pow(f.reciprocal(), -exponent);
}

PowerSeries to_series(const ExactPolynomial& p, int order) {
  PowerSeries s(static_cast<std::size_t>(std::max(order, 0)));
  for (int k = 0; k < order && k <= p.degree(); ++k) s[static_cast<std::size_t>(k)] = p.coeffs()[static_cast<std::size_t>(k)];
  return s;
}

PowerSeries series_multiply(const PowerSeries& a, const PowerSeries& b, int order) {
  PowerSeries c(static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < a.size() && i < c.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

PowerSeries series_inverse(const PowerSeries& p, int order) {
  if (p.empty() || sgn(p[0]) == 0) throw Error(Errc::DomainError, "series inverse needs nonzero constant term");
  PowerSeries inv(static_cast<std::size_t>(order));
  if (order == 0) return inv;
  inv[0] = 1 / p[0];
  for (std::size_t k = 1; k < inv.size(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k && j < p.size(); ++j) acc += p[j] * inv[k - j];
    inv[k] = -acc / p[0];
  }
  return inv;
}

PowerSeries series_log(const PowerSeries& p, int order) {
  if (p.empty() || p[0] != 1) throw Error(Errc::DomainError, "series log needs constant term 1");
  // log p = integral of p'/p
  PowerSeries deriv(static_cast<std::size_t>(order));
  for (std::size_t k = 1; k < p.size() && k <= deriv.size(); ++k) deriv[k - 1] = p[k] * static_cast<long>(k);
  const PowerSeries quotient = series_multiply(deriv, series_inverse(p, order), order);
  PowerSeries log(static_cast<std::size_t>(order));
  for (std::size_t k = 1; k < log.size(); ++k) log[k] = quotient[k - 1] / static_cast<long>(k);
  return log;
}

PowerSeries series_log(const ExactRationalFunction& f, int order) {
  const Rational n0 = f.numerator().coeff(0);
  const Rational d0 = f.denominator().coeff(0);
  if (sgn(d0) == 0 || n0 != d0) throw Error(Errc::DomainError, "series log needs f(0) == 1");
  const PowerSeries num = to_series(f.numerator() * (1 / n0), order);
  const PowerSeries den = to_series(f.denominator() * (1 / d0), order);
  PowerSeries a = series_log(num, order);
  const PowerSeries b = series_log(den, order);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

}  // namespace azw
