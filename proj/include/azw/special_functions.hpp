#pragma once

#include <complex>
#include <vector>

namespace azw {

using Complex = std::complex<double>;

/// Accuracy knobs shared by the numerical kernels.
struct PrecisionPolicy {
  double target = 1e-13;   // relative; never tighter than 1e-13
  int shift_terms = 24;    // explicit terms before the Euler-Maclaurin tail
  int bernoulli_terms = 12;  // even, K <= 30
  int quadrature_depth = 20;

  /// Default policy, with the target overridden by AZW_PRECISION if set.
  static PrecisionPolicy from_env();
  /// Throws Error(InvalidParameter) when the invariants are violated.
  void validate() const;
};

/// B_{2k} for k = 0..30 as doubles (computed exactly once over Q).
double bernoulli_even(int k);

struct HurwitzEvaluation {
  Complex value;
  Complex derivative;  // d/ds
  double error = 0.0;  // magnitude of the last Euler-Maclaurin correction
};

/// zeta(s, a) = sum_{k>=0} (k + a)^{-s} continued to s != 1, for Re a > 0.
/// Euler-Maclaurin with analytic term-wise s-derivative; the shift count is
/// escalated until the last correction is below target.
/// Throws Error(PoleAtOne) at s = 1, Error(NonPositiveShift) if Re a <= 0.
HurwitzEvaluation hurwitz_evaluate(Complex s, Complex a, const PrecisionPolicy& policy = {});
Complex hurwitz_zeta(Complex s, Complex a, const PrecisionPolicy& policy = {});
Complex hurwitz_zeta_ds(Complex s, Complex a, const PrecisionPolicy& policy = {});

/// zeta(s, a) - 1/(s - 1): entire in s, finite at s = 1 where it is -digamma(a).
Complex hurwitz_zeta_regular(Complex s, Complex a, const PrecisionPolicy& policy = {});

/// log Gamma(z) = zeta'(0, z) + log(2 pi)/2 for Re z > 0 (principal branch).
Complex log_gamma(Complex z, const PrecisionPolicy& policy = {});
Complex gamma(Complex z, const PrecisionPolicy& policy = {});

/// Order r, shift x and periods omega of a multiple Hurwitz zeta
///   zeta_r(s, x, omega) = sum_{n_1..n_r >= 0} (n . omega + x)^{-s}.
struct MultiZetaParams {
  int order = 1;
  Complex shift = 1.0;
  std::vector<double> periods{1.0};

  static MultiZetaParams equal(int order, Complex shift, double period) {
    return {order, shift, std::vector<double>(static_cast<std::size_t>(order), period)};
  }
  bool equal_periods() const;
  double period_sum() const;
  /// r in {1,2,3}, r == periods.size(), all periods > 0.
  void validate() const;
};

/// Analytic continuation for equal periods (any s outside {1..r}); unequal
/// periods fall back to the direct series and need Re s > r.
/// Errors: PoleAt, UnsupportedContinuation, NonPositiveShift.
Complex multiple_hurwitz_zeta(const MultiZetaParams& p, Complex s, const PrecisionPolicy& policy = {});

struct SeriesResult {
  Complex value;
  double tail_bound = 0.0;  // rigorous bound on the omitted lattice points
  long long terms = 0;
};

/// Direct lattice summation by shells n_1 + ... + n_r = T, truncated once
/// the tail bound drops below `tail_target` (or the term budget runs out).
/// Requires Re s > r and Re x > 0.
SeriesResult multiple_hurwitz_zeta_series(const MultiZetaParams& p, Complex s, double tail_target,
                                          long long term_budget = 20'000'000);

/// log Gamma_r(x, omega) = d/ds zeta_r(s, x, omega) at s = 0. Equal periods
/// only. For Re x <= 0 the function is continued through
/// Gamma_r(x) = Gamma_r(x + N) Gamma_{r-1}(x), Gamma_0(x) = 1/x; the
/// imaginary part is therefore only defined modulo 2 pi.
/// Throws Error(SingularPoint) on the lattice x = -kN.
Complex log_multiple_gamma(const MultiZetaParams& p, const PrecisionPolicy& policy = {});
Complex multiple_gamma(const MultiZetaParams& p, const PrecisionPolicy& policy = {});

/// S_r(x, omega) = Gamma_r(x)^{-1} Gamma_r(|omega| - x)^{(-1)^r}.
Complex log_multiple_sine(const MultiZetaParams& p, const PrecisionPolicy& policy = {});
Complex multiple_sine(const MultiZetaParams& p, const PrecisionPolicy& policy = {});

/// Weighted sum of equal-period multiple Hurwitz zetas sharing one period N,
///   sum_i weight_i * zeta_{r_i}(s, x_i, (N, ..., N)),
/// held as N^{-s} sum c_k zeta(s - j_k, x_k / N). Evaluation adds the pole
/// parts 1/(s - j - 1) once per j with their total residue, so poles of the
/// individual terms that cancel in the sum do not trip the evaluation.
class EqualPeriodZetaSum {
 public:
  explicit EqualPeriodZetaSum(double period);

  void add(int order, Complex shift, Complex weight = 1.0);

  /// Throws Error(PoleAt) where a net residue survives, Error(NonPositiveShift)
  /// if some Re x_i <= 0.
  Complex value(Complex s, const PrecisionPolicy& policy = {}, double* error = nullptr) const;

  double period() const noexcept { return period_; }

 private:
  struct Term {
    Complex coef;
    int shift;
    Complex a;
  };

  double period_;
  std::vector<Term> terms_;
};

}  // namespace azw
