#pragma once

#include <string_view>
#include <vector>

#include "azw/polynomial.hpp"
#include "azw/special_functions.hpp"

namespace azw {

/// f(x) = x^{l/2} prod_i (x^{m_i} - 1) / prod_j (x^{n_j} - 1).
struct CyclotomicForm {
  int l = 0;
  std::vector<int> m;  // numerator exponents, a = m.size()
  std::vector<int> n;  // denominator exponents, b = n.size()

  int a() const noexcept { return static_cast<int>(m.size()); }
  int b() const noexcept { return static_cast<int>(n.size()); }
  int m_sum() const noexcept;
  int n_sum() const noexcept;
  bool equal_denominator_periods() const noexcept;

  /// Exponents must be positive. Throws Error(InvalidParameter).
  void validate() const;
  /// Throws Error(OddHalfWeight) if l is odd.
  void require_even_l() const;

  /// Exact rational function (l even).
  ExactRationalFunction to_rational_function() const;
  Complex evaluate(Complex x) const;
  /// f(e^t) for real t > 0, using expm1 so small t keeps full accuracy.
  double evaluate_exp(double t) const;

  friend bool operator==(const CyclotomicForm&, const CyclotomicForm&) = default;
};

/// Writes f as a cyclotomic form, or throws Error(NotCyclotomic).
///
/// Numerator and denominator are split into a power of u, a constant and
/// cyclotomic polynomials Phi_d (exact trial division). Exponents e_d are
/// turned into multisets of (u^k - 1) factors by descending k:
/// g(k) = e_k - sum_{k | j, j > k} g(j). The constant must come out as 1.
/// The result is checked by resubstitution at three rational points.
CyclotomicForm factor_cyclotomic(const ExactRationalFunction& f);

struct AutomorphicData {
  int sign = 1;    // C = (-1)^{a-b}
  int weight = 0;  // D = l + |m| - |n|
  double max_residual = 0.0;
};

/// f(1/x) = C x^{-D} f(x), checked at x in {2, 3, 7.5}. Throws
/// Error(IdentityCheckFailed) above 1e-10 relative residual.
AutomorphicData automorphic_data(const CyclotomicForm& c);

enum class AbsZetaMethod { Structure, Series, Mellin };

AbsZetaMethod parse_method(std::string_view name);
std::string_view method_name(AbsZetaMethod method) noexcept;

struct AbsZetaValue {
  Complex value;
  AbsZetaMethod method = AbsZetaMethod::Structure;
  double error = 0.0;  // estimated absolute error
};

/// Absolute Hurwitz zeta Z_f(w, s) = (1/Gamma(w)) int_0^inf f(e^t) e^{-st} t^{w-1} dt.
///
///  Structure: sum over subsets I of {1..a} of (-1)^{a-|I|}
///             zeta_b(w, s - l/2 + |n| - m(I), n); equal denominator periods.
///  Series:    sign * sum_k c_k (s + |n| - |m| - l/2 + k)^{-w} with c_k the
///             power-series coefficients of prod(1-q^m)/prod(1-q^n); the tail
///             of each residue class mod lcm(n) is summed in closed form.
///  Mellin:    adaptive Gauss-Kronrod of the integral, split at t = 1.
/// Series and Mellin need Re w > b - a. Throws Error(DomainError) when a
/// precondition fails, Error(QuadratureBudgetExceeded) when the quadrature
/// cannot reach its tolerance.
AbsZetaValue absolute_hurwitz_Z(const CyclotomicForm& c, Complex w, Complex s, AbsZetaMethod method,
                                const PrecisionPolicy& policy = {});

/// zeta_f(s) = exp(d/dw Z_f(w, s) at w = 0)
///           = prod_I Gamma_b(s - l/2 + |n| - m(I), n)^{(-1)^{a-|I|}}.
/// Equal denominator periods. Throws Error(DomainError) when a gamma argument
/// lies on its singular lattice.
AbsZetaValue absolute_zeta(const CyclotomicForm& c, Complex s, const PrecisionPolicy& policy = {});
/// log zeta_f(s), imaginary part modulo 2 pi.
Complex log_absolute_zeta(const CyclotomicForm& c, Complex s, const PrecisionPolicy& policy = {});

/// The zeta of the cycle-graph Grover zeta: 1/(x^n - 1)^2.
inline CyclotomicForm cycle_grover_form(int n) { return {0, {}, {n, n}}; }

struct FunctionalEquationReport {
  int n = 0;
  double s = 0.0;
  Complex lhs;   // zeta_f(-2n - s)
  Complex sine;  // S_2(s + 2n, (n, n))
  Complex rhs;   // S_2 * zeta_f(s)
  double residual = 0.0;  // |lhs - rhs| / |lhs|
  bool holds = false;     // residual <= 1e-6
};

/// zeta_f(-2n - s) = S_2(s + 2n, (n, n)) zeta_f(s) for f = 1/(x^n - 1)^2.
/// Throws Error(SingularPoint) for s in {kn} or {-2n - kn}, k >= 0, and
/// Error(InvalidParameter) for n < 3.
FunctionalEquationReport verify_functional_equation(int n, double s, const PrecisionPolicy& policy = {});

}  // namespace azw
