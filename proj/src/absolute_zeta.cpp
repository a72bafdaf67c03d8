#include "azw/absolute_zeta.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "azw/errors.hpp"
#include "azw/exact_linalg.hpp"

namespace azw {

int CyclotomicForm::m_sum() const noexcept { return std::accumulate(m.begin(), m.end(), 0); }
int CyclotomicForm::n_sum() const noexcept { return std::accumulate(n.begin(), n.end(), 0); }

bool CyclotomicForm::equal_denominator_periods() const noexcept {
  return !n.empty() && std::all_of(n.begin(), n.end(), [&](int x) { return x == n.front(); });
}

void CyclotomicForm::validate() const {
  for (int x : m)
    if (x < 1) throw Error(Errc::InvalidParameter, "numerator exponents must be positive");
  for (int x : n)
    if (x < 1) throw Error(Errc::InvalidParameter, "denominator exponents must be positive");
}

void CyclotomicForm::require_even_l() const {
  if (l % 2 != 0) throw Error(Errc::OddHalfWeight, "x^{l/2} with odd l is not supported");
}

ExactRationalFunction CyclotomicForm::to_rational_function() const {
  validate();
  require_even_l();
  ExactPolynomial num = ExactPolynomial::constant(1);
  ExactPolynomial den = ExactPolynomial::constant(1);
  for (int x : m) num = num * ExactPolynomial::cyclic(x);
  for (int x : n) den = den * ExactPolynomial::cyclic(x);
  if (l > 0) num = num * ExactPolynomial::monomial(1, l / 2);
  if (l < 0) den = den * ExactPolynomial::monomial(1, -l / 2);
  return ExactRationalFunction(num, den);
}

Complex CyclotomicForm::evaluate(Complex x) const {
  require_even_l();
  Complex value = std::pow(x, l / 2);
  for (int k : m) value *= std::pow(x, k) - 1.0;
  for (int k : n) value /= std::pow(x, k) - 1.0;
  return value;
}

double CyclotomicForm::evaluate_exp(double t) const {
  double value = std::exp(0.5 * l * t);
  for (int k : m) value *= std::expm1(k * t);
  for (int k : n) value /= std::expm1(k * t);
  return value;
}

namespace {

int euler_phi(int d) {
  int result = d;
  int x = d;
  for (int p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      result -= result / p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

class CyclotomicCache {
 public:
  const ExactPolynomial& get(int d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    ExactPolynomial p = ExactPolynomial::cyclic(d);
    for (int e = 1; e < d; ++e) {
      if (d % e == 0) p = divmod(p, get(e)).quotient;
    }
    return cache_.emplace(d, std::move(p)).first->second;
  }

 private:
  std::map<int, ExactPolynomial> cache_;
};

struct Split {
  int power = 0;            // of u
  Rational constant = 1;
  std::map<int, int> exponents;  // d -> multiplicity of Phi_d
};

Split split_cyclotomic(ExactPolynomial p, CyclotomicCache& cache) {
  Split out;
  out.power = p.lowest_power();
  if (out.power > 0) {
    std::vector<Rational> c(p.coeffs().begin() + out.power, p.coeffs().end());
    p = ExactPolynomial(std::move(c));
  }
  const int initial = p.degree();
  const int bound = 2 * initial * initial + 2;
  for (int d = 1; d <= bound && p.degree() > 0; ++d) {
    if (euler_phi(d) > p.degree()) continue;
    const ExactPolynomial& phi = cache.get(d);
    ExactPolynomial q;
    while (p.degree() >= phi.degree() && divides_exactly(p, phi, q)) {
      p = q;
      ++out.exponents[d];
    }
  }
  if (p.degree() != 0) throw Error(Errc::NotCyclotomic, "factor outside the cyclotomic family remains");
  out.constant = p.leading();
  return out;
}

Rational evaluate_form_exact(const CyclotomicForm& c, const Rational& x) {
  Rational value = 1;
  for (int k = 0; k < std::abs(c.l / 2); ++k) {
    if (c.l > 0) value *= x;
    else value /= x;
  }
  auto power = [&](int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
  };
  for (int k : c.m) value *= power(k) - 1;
  for (int k : c.n) value /= power(k) - 1;
  return value;
}

void require_domain(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::DomainError, what);
}

std::vector<std::pair<Complex, int>> subset_shifts(const CyclotomicForm& c, Complex s) {
  // (shift, sign) for every index subset I of {1..a}
  std::vector<std::pair<Complex, int>> out;
  const int a = c.a();
  const Complex base = s - 0.5 * c.l + static_cast<double>(c.n_sum());
  for (unsigned mask = 0; mask < (1u << a); ++mask) {
    int m_i = 0;
    int size = 0;
    for (int i = 0; i < a; ++i) {
      if (mask & (1u << i)) {
        m_i += c.m[static_cast<std::size_t>(i)];
        ++size;
      }
    }
    out.emplace_back(base - static_cast<double>(m_i), ((a - size) % 2 == 0) ? 1 : -1);
  }
  return out;
}

AbsZetaValue structure_method(const CyclotomicForm& c, Complex w, Complex s, const PrecisionPolicy& policy) {
  require_domain(c.equal_denominator_periods(), "structure method needs equal denominator periods");
  require_domain(c.b() <= 3, "structure method supports b <= 3");
  EqualPeriodZetaSum sum(static_cast<double>(c.n.front()));
  for (const auto& [shift, sign] : subset_shifts(c, s)) {
    require_domain(shift.real() > 0.0, "structure shift has Re <= 0; outside the principal domain");
    sum.add(c.b(), shift, static_cast<double>(sign));
  }
  double err = 0.0;
  const Complex value = sum.value(w, policy, &err);
  return {value, AbsZetaMethod::Structure, err + 1e-15 * std::abs(value)};
}

// sum_{j>=0} (y0 + jL)^p for Re y0 large, by Euler-Maclaurin at j = 0. For
// Re p >= -1 this is the continued (Hurwitz-type) value; at p = -1 the pole
// -1/(L(p+1)) is dropped and only its finite part remains.
Complex power_tail(Complex y0, double period, Complex p, double& error) {
  const Complex log_y0 = std::log(y0);
  Complex sum = std::abs(p + 1.0) < 1e-12 ? -log_y0 / period
                                          : -std::exp((p + 1.0) * log_y0) / (period * (p + 1.0));
  sum += 0.5 * std::exp(p * log_y0);
  // h^{(q)}(0) = L^q p (p-1) ... (p-q+1) y0^{p-q}
  Complex falling = p;  // q = 1
  double lq = period;
  Complex ypow = std::exp((p - 1.0) * log_y0);
  double fact = 2.0;  // (2k)!
  double last = 0.0;
  for (int k = 1; k <= 8; ++k) {
    const Complex derivative = lq * falling * ypow;
    const Complex term = -bernoulli_even(k) / fact * derivative;
    sum += term;
    last = std::abs(term);
    // advance q = 2k-1 -> 2k+1
    falling *= (p - static_cast<double>(2 * k - 1)) * (p - static_cast<double>(2 * k));
    lq *= period * period;
    ypow /= y0 * y0;
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  error += last;
  return sum;
}

AbsZetaValue series_method(const CyclotomicForm& c, Complex w, Complex s) {
  require_domain(c.b() >= 1, "series method needs b >= 1");
  require_domain(w.real() > c.b() - c.a(), "series method needs Re w > b - a");
  const double c0 = c.n_sum() - c.m_sum() - 0.5 * c.l;
  const Complex beta = s + c0;
  require_domain(beta.real() > 0.0, "series method needs Re s > l/2 + |m| - |n|");

  long long period = 1;
  for (int x : c.n) period = std::lcm(period, static_cast<long long>(x));
  const int degree = c.b() - 1;
  const long long start = c.m_sum();
  const long long blocks = std::max<long long>(200, 4000 / period);
  const long long explicit_count = start + period * (blocks + degree + 2);
  require_domain(explicit_count < 4'000'000, "series method: denominator periods too large");

  // power-series coefficients of prod(1 - q^m) / prod(1 - q^n)
  std::vector<long long> coeff(static_cast<std::size_t>(explicit_count + 1), 0);
  coeff[0] = 1;
  for (int x : c.m)
    for (long long k = explicit_count; k >= x; --k) coeff[static_cast<std::size_t>(k)] -= coeff[static_cast<std::size_t>(k - x)];
  for (int x : c.n)
    for (long long k = x; k <= explicit_count; ++k) coeff[static_cast<std::size_t>(k)] += coeff[static_cast<std::size_t>(k - x)];

  Complex head = 0.0;
  double roundoff = 0.0;
  for (long long k = 0; k < explicit_count; ++k) {
    const long long ck = coeff[static_cast<std::size_t>(k)];
    if (ck == 0) continue;
    const Complex term = static_cast<double>(ck) * std::exp(-w * std::log(beta + static_cast<double>(k)));
    head += term;
    roundoff += 1e-16 * std::abs(term);
  }

  // For k >= |m| the coefficients form a quasi-polynomial of degree <= b-1
  // with period lcm(n); fit each residue class exactly and sum its tail.
  Complex tail = 0.0;
  double tail_error = 0.0;
  // residue-class tails may diverge individually; their poles must cancel
  Complex pole = 0.0;
  double pole_scale = 0.0;
  for (long long rho = 0; rho < period; ++rho) {
    const long long first = explicit_count + ((rho - explicit_count) % period + period) % period;
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (int i = 1; i <= degree + 1; ++i) {
      const long long k = first - period * i;
      xs.emplace_back(static_cast<long>(k));
      ys.emplace_back(static_cast<long>(coeff[static_cast<std::size_t>(k)]));
    }
    const ExactPolynomial fit = interpolate(xs, ys);
    const long long check = first - period * (degree + 2);
    if (check >= start && fit(Rational(static_cast<long>(check))) != Rational(static_cast<long>(coeff[static_cast<std::size_t>(check)]))) {
      throw Error(Errc::DomainError, "series coefficients are not quasi-polynomial where expected");
    }
    if (fit.is_zero()) continue;
    // rewrite fit(k) in y = beta + k: fit(y - beta) = sum_i d_i y^i
    std::vector<Complex> d(static_cast<std::size_t>(fit.degree()) + 1, 0.0);
    {
      std::vector<Complex> basis{1.0};  // (y - beta)^i
      for (int i = 0; i <= fit.degree(); ++i) {
        const double fi = fit.coeffs()[static_cast<std::size_t>(i)].get_d();
        for (std::size_t j = 0; j < basis.size(); ++j) d[j] += fi * basis[j];
        std::vector<Complex> next(basis.size() + 1, 0.0);
        for (std::size_t j = 0; j < basis.size(); ++j) {
          next[j + 1] += basis[j];
          next[j] -= beta * basis[j];
        }
        basis = std::move(next);
      }
    }
    const Complex y0 = beta + static_cast<double>(first);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == Complex(0.0, 0.0)) continue;
      const Complex p = static_cast<double>(i) - w;
      if (std::abs(p + 1.0) < 1e-12) {
        pole += d[i];
        pole_scale += std::abs(d[i]);
      }
      tail += d[i] * power_tail(y0, static_cast<double>(period), p, tail_error);
    }
  }
  require_domain(std::abs(pole) <= 1e-9 * std::max(1.0, pole_scale), "series diverges: Re w too small for this form");
  const Complex value = head + tail;
  return {value, AbsZetaMethod::Series, tail_error + roundoff + 1e-15 * std::abs(value)};
}

AbsZetaValue mellin_method(const CyclotomicForm& c, Complex w, Complex s, const PrecisionPolicy& policy) {
  const double excess = w.real() - (c.b() - c.a());
  require_domain(excess > 0.0, "Mellin method needs Re w > b - a");
  require_domain(w.real() > 0.0, "Mellin method needs Re w > 0");
  const double growth = 0.5 * c.l + c.m_sum() - c.n_sum();
  require_domain(s.real() > growth, "Mellin integral diverges at infinity: Re s <= l/2 + |m| - |n|");

  using boost::math::quadrature::gauss_kronrod;
  const double tol = 1e-12;
  const auto depth = static_cast<unsigned>(policy.quadrature_depth);
  auto integrand = [&](double t) -> Complex {
    return c.evaluate_exp(t) * std::exp(-s * t + (w - 1.0) * std::log(t));
  };

  // (0, 1]: t = tau^p so the t^{w-1-(b-a)} endpoint behaviour becomes C^1
  const int p = std::clamp(static_cast<int>(std::ceil(2.0 / excess)), 1, 64);
  double err_head = 0.0;
  const Complex head = gauss_kronrod<double, 15>::integrate(
      [&](double tau) -> Complex {
        if (tau <= 0.0) return 0.0;
        const double t = std::pow(tau, p);
        return integrand(t) * (p * std::pow(tau, p - 1));
      },
      0.0, 1.0, depth, tol, &err_head);

  // [1, inf): t = 1 + e^v, truncated where the integrand drops below 1e-18
  const double v_lo = std::log(1e-18);
  auto tail_integrand = [&](double v) -> Complex {
    const double ev = std::exp(v);
    return integrand(1.0 + ev) * ev;
  };
  const double scale = std::max(std::abs(integrand(1.0)), 1e-300);
  double v_hi = 0.0;
  while (std::abs(tail_integrand(v_hi)) > 1e-18 * scale && v_hi < 12.0) v_hi += 0.25;
  double err_tail = 0.0;
  const Complex tail = gauss_kronrod<double, 15>::integrate(tail_integrand, v_lo, v_hi, depth, tol, &err_tail);

  const Complex inv_gamma = std::exp(-log_gamma(w, policy));
  const Complex value = (head + tail) * inv_gamma;
  const double err = (err_head + err_tail + 2e-18 * scale) * std::abs(inv_gamma) + 1e-14 * std::abs(value);
  if (!(err <= std::max(1e-8 * std::abs(value), 1e-14))) {
    throw Error(Errc::QuadratureBudgetExceeded, "Mellin quadrature error estimate " + std::to_string(err));
  }
  return {value, AbsZetaMethod::Mellin, err};
}

}  // namespace

CyclotomicForm factor_cyclotomic(const ExactRationalFunction& f) {
  if (f.numerator().is_zero()) throw Error(Errc::NotCyclotomic, "zero function");
  CyclotomicCache cache;
  const Split num = split_cyclotomic(f.numerator(), cache);
  const Split den = split_cyclotomic(f.denominator(), cache);
  if (num.constant / den.constant != 1) {
    throw Error(Errc::NotCyclotomic, "leading constant " + to_string(num.constant / den.constant) + " != 1");
  }

  std::map<int, int> e = num.exponents;
  for (const auto& [d, k] : den.exponents) e[d] -= k;
  int top = 0;
  for (const auto& [d, k] : e)
    if (k != 0) top = std::max(top, d);

  // descending Moebius-style peel: e_d = sum_{d | k} g(k)
  std::vector<int> g(static_cast<std::size_t>(top) + 1, 0);
  for (int d = top; d >= 1; --d) {
    int value = e.count(d) ? e[d] : 0;
    for (int k = 2 * d; k <= top; k += d) value -= g[static_cast<std::size_t>(k)];
    g[static_cast<std::size_t>(d)] = value;
  }

  CyclotomicForm form;
  form.l = 2 * (num.power - den.power);
  for (int d = top; d >= 1; --d) {
    for (int k = 0; k < g[static_cast<std::size_t>(d)]; ++k) form.m.push_back(d);
    for (int k = 0; k < -g[static_cast<std::size_t>(d)]; ++k) form.n.push_back(d);
  }

  for (const Rational& x : {Rational(2), Rational(3), ratio(5, 2)}) {
    if (evaluate_form_exact(form, x) != f(x)) {
      throw Error(Errc::NotCyclotomic, "resubstitution check failed at " + to_string(x));
    }
  }
  return form;
}

AutomorphicData automorphic_data(const CyclotomicForm& c) {
  c.validate();
  c.require_even_l();
  AutomorphicData out;
  out.sign = ((c.a() - c.b()) % 2 == 0) ? 1 : -1;
  out.weight = c.l + c.m_sum() - c.n_sum();
  for (double x : {2.0, 3.0, 7.5}) {
    const Complex lhs = c.evaluate(1.0 / x);
    const Complex rhs = static_cast<double>(out.sign) * std::pow(x, -out.weight) * c.evaluate(x);
    out.max_residual = std::max(out.max_residual, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300));
  }
  if (out.max_residual > 1e-10) {
    throw Error(Errc::IdentityCheckFailed, "f(1/x) != C x^{-D} f(x), residual " + std::to_string(out.max_residual));
  }
  return out;
}

AbsZetaMethod parse_method(std::string_view name) {
  if (name == "structure") return AbsZetaMethod::Structure;
  if (name == "series") return AbsZetaMethod::Series;
  if (name == "mellin") return AbsZetaMethod::Mellin;
  throw Error(Errc::InvalidParameter, "unknown method '" + std::string(name) + "'");
}

std::string_view method_name(AbsZetaMethod method) noexcept {
  switch (method) {
    case AbsZetaMethod::Structure: return "structure";
    case AbsZetaMethod::Series: return "series";
    case AbsZetaMethod::Mellin: return "mellin";
  }
  return "unknown";
}

AbsZetaValue absolute_hurwitz_Z(const CyclotomicForm& c, Complex w, Complex s, AbsZetaMethod method,
                                const PrecisionPolicy& policy) {
  c.validate();
  c.require_even_l();
  switch (method) {
    case AbsZetaMethod::Structure: return structure_method(c, w, s, policy);
    case AbsZetaMethod::Series: return series_method(c, w, s);
    case AbsZetaMethod::Mellin: return mellin_method(c, w, s, policy);
  }
  throw Error(Errc::InvalidParameter, "unknown method");
}

Complex log_absolute_zeta(const CyclotomicForm& c, Complex s, const PrecisionPolicy& policy) {
  c.validate();
  c.require_even_l();
  require_domain(c.equal_denominator_periods(), "absolute zeta needs equal denominator periods");
  require_domain(c.b() <= 3, "absolute zeta supports b <= 3");
  const auto params_for = [&](Complex shift) {
    return MultiZetaParams::equal(c.b(), shift, static_cast<double>(c.n.front()));
  };
  Complex total = 0.0;
  for (const auto& [shift, sign] : subset_shifts(c, s)) {
    try {
      total += static_cast<double>(sign) * log_multiple_gamma(params_for(shift), policy);
    } catch (const Error& e) {
      if (e.code() == Errc::SingularPoint) throw Error(Errc::DomainError, e.what());
      throw;
    }
  }
  return total;
}

AbsZetaValue absolute_zeta(const CyclotomicForm& c, Complex s, const PrecisionPolicy& policy) {
  const Complex value = std::exp(log_absolute_zeta(c, s, policy));
  const double terms = static_cast<double>(1u << c.a());
  return {value, AbsZetaMethod::Structure, 10.0 * terms * std::max(policy.target, 1e-15) * std::abs(value)};
}

FunctionalEquationReport verify_functional_equation(int n, double s, const PrecisionPolicy& policy) {
  if (n < 3) throw Error(Errc::InvalidParameter, "functional equation check expects n >= 3");
  auto on_lattice = [&](double x) {
    // x in {k n : k >= 0}
    if (x < -1e-12) return false;
    const double k = std::round(x / n);
    return std::abs(x - k * n) <= 1e-12 * std::max(1.0, std::abs(x));
  };
  if (on_lattice(s) || on_lattice(-2.0 * n - s)) {
    throw Error(Errc::SingularPoint, "s = " + std::to_string(s) + " hits the gamma lattice");
  }
  const CyclotomicForm form = cycle_grover_form(n);
  FunctionalEquationReport report;
  report.n = n;
  report.s = s;
  report.lhs = absolute_zeta(form, -2.0 * n - s, policy).value;
  report.sine = multiple_sine(MultiZetaParams::equal(2, s + 2.0 * n, static_cast<double>(n)), policy);
  report.rhs = report.sine * absolute_zeta(form, s, policy).value;
  report.residual = std::abs(report.lhs - report.rhs) / std::abs(report.lhs);
  report.holds = report.residual <= 1e-6;
  return report;
}

}  // namespace azw
