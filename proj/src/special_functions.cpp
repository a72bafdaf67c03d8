#include "azw/special_functions.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <string>

#include "azw/errors.hpp"

namespace azw {

namespace {

constexpr int kMaxBernoulli = 30;

std::array<double, kMaxBernoulli + 1> make_even_bernoulli() {
  // sum_{k=0}^{n} C(n+1, k) B_k = 0
  constexpr int top = 2 * kMaxBernoulli;
  std::vector<mpq_class> b(top + 1);
  b[0] = 1;
  for (int n = 1; n <= top; ++n) {
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(n+1, k)
    for (int k = 0; k < n; ++k) {
      acc += binom * b[static_cast<std::size_t>(k)];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(n)] = -acc / (n + 1);
  }
  std::array<double, kMaxBernoulli + 1> even{};
  for (int k = 0; k <= kMaxBernoulli; ++k) even[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(2 * k)].get_d();
  return even;
}

const std::array<double, kMaxBernoulli + 1>& even_bernoulli() {
  static const auto table = make_even_bernoulli();
  return table;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// (e^z - 1)/z, accurate near z = 0
Complex expm1_over_z(Complex z) {
  if (std::abs(z) < 0.5) {
    Complex term = 1.0;
    Complex sum = 1.0;
    for (int k = 2; k <= 24; ++k) {
      term *= z / static_cast<double>(k);
      sum += term;
    }
    return sum;
  }
  return (std::exp(z) - 1.0) / z;
}

struct EulerMaclaurin {
  Complex value;       // zeta(s,a), or the regular part if requested
  Complex derivative;  // d/ds zeta(s,a) (not for the regular part at s = 1)
  double error;
};

EulerMaclaurin euler_maclaurin(Complex s, Complex a, const PrecisionPolicy& policy, bool regular) {
  if (a.real() <= 0.0) throw Error(Errc::NonPositiveShift, "Hurwitz zeta needs Re a > 0, got " + std::to_string(a.real()));
  const bool at_pole = s == Complex(1.0, 0.0);
  if (at_pole && !regular) throw Error(Errc::PoleAtOne, "Hurwitz zeta has a pole at s = 1");

  const auto& bern = even_bernoulli();
  const int terms = std::clamp(policy.bernoulli_terms, 1, kMaxBernoulli);
  int shift = std::max(policy.shift_terms, static_cast<int>(std::ceil(std::abs(s))) + 4);

  for (int attempt = 0;; ++attempt) {
    Complex sum = 0.0;
    Complex dsum = 0.0;
    for (int k = 0; k < shift; ++k) {
      const Complex log_base = std::log(a + static_cast<double>(k));
      const Complex t = std::exp(-s * log_base);
      sum += t;
      dsum -= log_base * t;
    }
    const Complex n = a + static_cast<double>(shift);
    const Complex log_n = std::log(n);
    const Complex n_pow = std::exp(-s * log_n);  // N^{-s}

    // integral term N^{1-s}/(s-1)
    if (regular) {
      // (N^{1-s} - 1)/(s-1) = -log N * expm1((1-s) log N)/((1-s) log N)
      sum -= log_n * expm1_over_z((1.0 - s) * log_n);
    } else {
      const Complex integral = n_pow * n / (s - 1.0);
      sum += integral;
      dsum += -log_n * integral - integral / (s - 1.0);
    }
    sum += 0.5 * n_pow;
    dsum -= 0.5 * log_n * n_pow;

    // sum_j B_2j/(2j)! (s)_{2j-1} N^{-s-2j+1}
    Complex rising = s;        // (s)_1
    Complex rising_ds = 1.0;   // d/ds (s)_1
    Complex power = n_pow / n; // N^{-s-1}
    const Complex inv_n2 = 1.0 / (n * n);
    double last = 0.0;
    double scale = std::max(std::abs(sum), regular ? 0.0 : std::abs(dsum));
    for (int j = 1; j <= terms; ++j) {
      const double c = bern[static_cast<std::size_t>(j)] / factorial(2 * j);
      const Complex term = c * rising * power;
      const Complex dterm = c * (rising_ds - log_n * rising) * power;
      sum += term;
      dsum += dterm;
      last = std::max(std::abs(term), regular ? 0.0 : std::abs(dterm));
      scale = std::max({scale, std::abs(sum), regular ? 0.0 : std::abs(dsum)});
      // advance (s)_{2j-1} -> (s)_{2j+1}
      for (int q = 0; q < 2; ++q) {
        const Complex factor = s + static_cast<double>(2 * j - 1 + q);
        rising_ds = rising_ds * factor + rising;
        rising *= factor;
      }
      power *= inv_n2;
    }
    const double target = std::max(policy.target, 1e-16) * std::max(scale, 1e-300);
    if (last <= target || attempt >= 6) return {sum, dsum, last};
    shift *= 2;
  }
}

// Coefficients c_j(a) with binom(k + r - 1, r - 1) = sum_j c_j (a + k)^j.
std::vector<Complex> lattice_multiplicity_coefficients(int order, Complex a) {
  switch (order) {
    case 1: return {1.0};
    case 2: return {1.0 - a, 1.0};
    case 3: return {(1.0 - a) * (2.0 - a) / 2.0, (3.0 - 2.0 * a) / 2.0, 0.5};
    default: break;
  }
  throw Error(Errc::InvalidParameter, "multiple zeta order must be 1, 2 or 3");
}

void require_principal_shift(Complex x) {
  if (x.real() <= 0.0) {
    throw Error(Errc::NonPositiveShift, "multiple zeta needs Re x > 0, got " + std::to_string(x.real()));
  }
}

bool near_integer_lattice(Complex x, double period) {
  if (std::abs(x.imag()) > 1e-12 * std::max(1.0, period)) return false;
  if (x.real() > 1e-12 * period) return false;
  const double k = std::round(-x.real() / period);
  return std::abs(x.real() + k * period) <= 1e-12 * std::max(1.0, std::abs(x.real()));
}

Complex log_gamma_equal_periods(int order, Complex x, double period, const PrecisionPolicy& policy) {
  if (order == 0) {
    if (x == Complex(0.0, 0.0)) throw Error(Errc::SingularPoint, "Gamma_0 is singular at 0");
    return -std::log(x);
  }
  if (near_integer_lattice(x, period)) {
    throw Error(Errc::SingularPoint, "multiple gamma argument on the lattice -kN");
  }
  if (x.real() <= 0.0) {
    return log_gamma_equal_periods(order, x + period, period, policy) +
           log_gamma_equal_periods(order - 1, x, period, policy);
  }
  const Complex a = x / period;
  const double log_n = std::log(period);
  const auto coeffs = lattice_multiplicity_coefficients(order, a);
  Complex result = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto h = euler_maclaurin(Complex(-static_cast<double>(j), 0.0), a, policy, false);
    result += coeffs[j] * (h.derivative - log_n * h.value);
  }
  return result;
}

}  // namespace

PrecisionPolicy PrecisionPolicy::from_env() {
  PrecisionPolicy policy;
  if (const char* env = std::getenv("AZW_PRECISION")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && value > 0.0) policy.target = std::max(value, 1e-13);
  }
  return policy;
}

void PrecisionPolicy::validate() const {
  if (!(target >= 1e-13)) throw Error(Errc::InvalidParameter, "precision target must be >= 1e-13");
  if (bernoulli_terms < 2 || bernoulli_terms > kMaxBernoulli || bernoulli_terms % 2 != 0) {
    throw Error(Errc::InvalidParameter, "Bernoulli order must be even and at most 30");
  }
  if (shift_terms < 1) throw Error(Errc::InvalidParameter, "shift count must be positive");
}

double bernoulli_even(int k) {
  if (k < 0 || k > kMaxBernoulli) throw Error(Errc::InvalidParameter, "Bernoulli index out of range");
  return even_bernoulli()[static_cast<std::size_t>(k)];
}

HurwitzEvaluation hurwitz_evaluate(Complex s, Complex a, const PrecisionPolicy& policy) {
  const auto em = euler_maclaurin(s, a, policy, false);
  return {em.value, em.derivative, em.error};
}

Complex hurwitz_zeta(Complex s, Complex a, const PrecisionPolicy& policy) {
  return euler_maclaurin(s, a, policy, false).value;
}

Complex hurwitz_zeta_ds(Complex s, Complex a, const PrecisionPolicy& policy) {
  return euler_maclaurin(s, a, policy, false).derivative;
}

Complex hurwitz_zeta_regular(Complex s, Complex a, const PrecisionPolicy& policy) {
  return euler_maclaurin(s, a, policy, true).value;
}

Complex log_gamma(Complex z, const PrecisionPolicy& policy) {
  return hurwitz_zeta_ds(0.0, z, policy) + 0.5 * std::log(2.0 * std::numbers::pi);
}

Complex gamma(Complex z, const PrecisionPolicy& policy) { return std::exp(log_gamma(z, policy)); }

bool MultiZetaParams::equal_periods() const {
  return std::all_of(periods.begin(), periods.end(), [&](double w) { return w == periods.front(); });
}

double MultiZetaParams::period_sum() const {
  double total = 0.0;
  for (double w : periods) total += w;
  return total;
}

void MultiZetaParams::validate() const {
  if (order < 1 || order > 3) throw Error(Errc::InvalidParameter, "order must be 1, 2 or 3");
  if (static_cast<int>(periods.size()) != order) throw Error(Errc::InvalidParameter, "period count must equal order");
  for (double w : periods)
    if (!(w > 0.0)) throw Error(Errc::InvalidParameter, "periods must be positive");
}

Complex multiple_hurwitz_zeta(const MultiZetaParams& p, Complex s, const PrecisionPolicy& policy) {
  p.validate();
  if (p.equal_periods()) {
    EqualPeriodZetaSum sum(p.periods.front());
    sum.add(p.order, p.shift);
    return sum.value(s, policy);
  }
  if (s.real() <= static_cast<double>(p.order)) {
    throw Error(Errc::UnsupportedContinuation, "unequal periods need Re s > r");
  }
  return multiple_hurwitz_zeta_series(p, s, policy.target * 1e-3).value;
}

SeriesResult multiple_hurwitz_zeta_series(const MultiZetaParams& p, Complex s, double tail_target,
                                          long long term_budget) {
  p.validate();
  require_principal_shift(p.shift);
  const int r = p.order;
  const double sigma = s.real();
  if (sigma <= r) throw Error(Errc::UnsupportedContinuation, "direct series needs Re s > r");
  const double w_min = *std::min_element(p.periods.begin(), p.periods.end());
  // |z^{-s}| <= |z|^{-sigma} e^{|Im s| |arg z|} and |arg z| <= |arg x| on the lattice
  const double phase = std::exp(std::abs(s.imag()) * std::abs(std::arg(p.shift)));
  const double fact = factorial(r - 1);
  auto tail_bound = [&](long long t0) {
    // binom(T+r-1, r-1) <= (1 + (r-1)/T0)^{r-1} T^{r-1}/(r-1)!, (T w + X)^{-sigma} <= (T w)^{-sigma}
    const double t = static_cast<double>(t0);
    const double c1 = std::pow(1.0 + (r - 1) / t, r - 1);
    return phase * c1 / fact * std::pow(w_min, -sigma) * std::pow(t, r - sigma) / (sigma - r);
  };

  SeriesResult out;
  long long shell = 0;
  auto add = [&](double lattice) {
    out.value += std::exp(-s * std::log(p.shift + lattice));
    ++out.terms;
  };
  for (;; ++shell) {
    if (shell > 0 && tail_bound(shell) <= tail_target) break;
    if (out.terms > term_budget) break;
    const auto t = static_cast<int>(shell);
    if (r == 1) {
      add(t * p.periods[0]);
    } else if (r == 2) {
      for (int i = 0; i <= t; ++i) add(i * p.periods[0] + (t - i) * p.periods[1]);
    } else {
      for (int i = 0; i <= t; ++i)
        for (int j = 0; i + j <= t; ++j) add(i * p.periods[0] + j * p.periods[1] + (t - i - j) * p.periods[2]);
    }
  }
  out.tail_bound = tail_bound(std::max<long long>(shell, 1));
  return out;
}

Complex log_multiple_gamma(const MultiZetaParams& p, const PrecisionPolicy& policy) {
  p.validate();
  if (!p.equal_periods()) throw Error(Errc::UnsupportedContinuation, "multiple gamma needs equal periods");
  return log_gamma_equal_periods(p.order, p.shift, p.periods.front(), policy);
}

Complex multiple_gamma(const MultiZetaParams& p, const PrecisionPolicy& policy) {
  return std::exp(log_multiple_gamma(p, policy));
}

Complex log_multiple_sine(const MultiZetaParams& p, const PrecisionPolicy& policy) {
  MultiZetaParams reflected = p;
  reflected.shift = p.period_sum() - p.shift;
  const double sign = (p.order % 2 == 0) ? 1.0 : -1.0;
  return -log_multiple_gamma(p, policy) + sign * log_multiple_gamma(reflected, policy);
}

Complex multiple_sine(const MultiZetaParams& p, const PrecisionPolicy& policy) {
  return std::exp(log_multiple_sine(p, policy));
}

EqualPeriodZetaSum::EqualPeriodZetaSum(double period) : period_(period) {
  if (!(period > 0.0)) throw Error(Errc::InvalidParameter, "period must be positive");
}

void EqualPeriodZetaSum::add(int order, Complex shift, Complex weight) {
  const Complex a = shift / period_;
  const auto coeffs = lattice_multiplicity_coefficients(order, a);
  for (std::size_t j = 0; j < coeffs.size(); ++j) terms_.push_back({weight * coeffs[j], static_cast<int>(j), a});
}

Complex EqualPeriodZetaSum::value(Complex s, const PrecisionPolicy& policy, double* error) const {
  std::map<int, Complex> residues;
  double scale = 0.0;
  Complex regular = 0.0;
  double err = 0.0;
  for (const Term& t : terms_) {
    require_principal_shift(t.a);
    const auto em = euler_maclaurin(s - static_cast<double>(t.shift), t.a, policy, true);
    regular += t.coef * em.value;
    err += std::abs(t.coef) * (em.error + 1e-16 * std::abs(em.value));
    residues[t.shift] += t.coef;
    scale += std::abs(t.coef);
  }
  Complex poles = 0.0;
  for (const auto& [shift, residue] : residues) {
    if (std::abs(residue) <= 1e-12 * std::max(scale, 1.0)) continue;
    const Complex gap = s - static_cast<double>(shift) - 1.0;
    if (gap == Complex(0.0, 0.0)) {
      throw Error(Errc::PoleAt, "multiple zeta pole at s = " + std::to_string(shift + 1));
    }
    poles += residue / gap;
  }
  const Complex n_pow = std::exp(-s * std::log(period_));
  if (error) *error = std::abs(n_pow) * err;
  return n_pow * (regular + poles);
}

}  // namespace azw
