#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "azw/exact_matrix.hpp"
#include "azw/graph.hpp"
#include "azw/polynomial.hpp"

namespace azw {

/// 1 / det(I - u U_G), normalized (monic denominator).
ExactRationalFunction grover_zeta(const Graph& g);

enum class IharaRoute { EdgeMatrix, Bass };

/// Ihara zeta as an exact rational function, either as 1/det(I - u B) over
/// the non-backtracking arc matrix or through the vertex determinant
/// (1 - u^2)^{betti-1} det(I - uA + u^2(D - I)). Both routes agree on every
/// simple connected graph.
ExactRationalFunction ihara_zeta(const Graph& g, IharaRoute route);

struct KonnoSatoReport {
  ExactPolynomial lhs;          // det(I - uU)
  ExactRationalFunction rhs;    // (1-u^2)^{m-n} det((1+u^2)I - 2uP)
  ExactRationalFunction difference;
  bool holds = false;
};

KonnoSatoReport verify_konno_sato(const Graph& g);

struct IharaRoutesReport {
  ExactRationalFunction edge_route;
  ExactRationalFunction bass_route;
  /// 1/det(I - u (U^T)^+), the Grover positive-support zeta.
  ExactRationalFunction support_route;
  bool routes_agree = false;
  bool min_degree_at_least_two = false;
  /// positive_support(U^T) == edge_matrix. Expected iff min degree >= 2.
  bool support_equals_edge_matrix = false;
};

IharaRoutesReport verify_ihara_routes(const Graph& g);

struct IharaSeriesReport {
  int r_max = 0;
  /// N_r for r = 1..r_max: closed arc sequences (with start) that are
  /// backtrack-free including the wrap-around step.
  std::vector<std::int64_t> cycle_counts;
  /// Same cycles up to rotation of the starting arc.
  std::vector<std::int64_t> rotation_classes;
  /// r * [u^r] log Z(G,u), exact.
  std::vector<Rational> log_coefficients;
  Rational max_discrepancy;
  bool holds = false;
};

/// Brute-force reduced-cycle enumeration against the formal power series of
/// log Z. r_max must lie in [1, 8].
IharaSeriesReport verify_ihara_series(const Graph& g, int r_max);

/// Brute-force count of closed non-backtracking arc sequences of length r.
std::int64_t count_reduced_cycles(const Graph& g, int r);

enum class SpectrumSource { Direct, KonnoSatoMapped, Transition };

struct SpectralCluster {
  std::complex<double> value;
  int multiplicity = 0;
};

struct SpectrumReport {
  std::vector<SpectralCluster> clusters;
  SpectrumSource source = SpectrumSource::Direct;
  double tolerance = 1e-8;

  int total_multiplicity() const;
};

/// Groups values within `tolerance` of a running cluster mean. Output is
/// sorted by (real, imag) so reports are reproducible.
std::vector<SpectralCluster> cluster_eigenvalues(const std::vector<std::complex<double>>& values, double tolerance);

/// Eigenvalues of U_G from a dense floating eigensolver.
SpectrumReport spectrum(const Graph& g, double tolerance = 1e-8);

/// Eigenvalues of P via D^{-1/2} A D^{-1/2}, each mapped to the roots of
/// lambda^2 - 2 mu lambda + 1, plus (m - n) copies each of +1 and -1 (removed
/// instead when m < n). Throws Error(SpectralMismatch) if a removal target is
/// missing.
SpectrumReport spectrum_via_konno_sato(const Graph& g, double tolerance = 1e-8);

/// Eigenvalues of the transition matrix P.
SpectrumReport transition_spectrum(const Graph& g, double tolerance = 1e-8);

/// Multiset equality: a one-to-one pairing of clusters with equal
/// multiplicity and centers within `tolerance`.
bool spectra_match(const SpectrumReport& a, const SpectrumReport& b, double tolerance);
bool spectra_match(const SpectrumReport& a, const std::vector<SpectralCluster>& expected, double tolerance);

/// Runs both spectral routes and throws Error(SpectralMismatch) if they differ.
void verify_spectral_mapping(const Graph& g, double tolerance = 1e-8);

struct AutomorphyCertificate {
  int sign = 1;     // C = det U_G
  int weight = 0;   // D = -2m
  double max_residual = 0.0;
  bool exact_identity = false;
};

/// Certifies zeta(1/u) = C u^{2m} zeta(u): exactly via coefficient reversal of
/// det(I - uU), numerically at u in {2, 3.5, 10}. Throws
/// Error(CertificateFailed) if either check fails.
AutomorphyCertificate automorphic_weight(const Graph& g);

}  // namespace azw
