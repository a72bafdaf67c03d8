#include "azw/graph_zeta.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

#include "azw/errors.hpp"
#include "azw/exact_linalg.hpp"
#include "azw/walk_operators.hpp"

namespace azw {

namespace {

// 1 - u^2
ExactPolynomial one_minus_u_squared() { return ExactPolynomial({Rational(1), Rational(0), Rational(-1)}); }

// (1 - u^2)^k as a rational function, k of either sign.
ExactRationalFunction one_minus_u_squared_pow(int k) {
  return pow(ExactRationalFunction(one_minus_u_squared()), k);
}

Eigen::MatrixXd to_eigen(const ExactMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

std::vector<double> symmetric_transition_eigenvalues(const Graph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    const double w = 1.0 / std::sqrt(static_cast<double>(g.degree(e.lo)) * g.degree(e.hi));
    s(e.lo, e.hi) = w;
    s(e.hi, e.lo) = w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

void remove_nearest(std::vector<std::complex<double>>& values, std::complex<double> target, double tolerance) {
  auto best = values.end();
  double best_dist = tolerance;
  for (auto it = values.begin(); it != values.end(); ++it) {
    const double d = std::abs(*it - target);
    if (d <= best_dist) {
      best_dist = d;
      best = it;
    }
  }
  if (best == values.end()) {
    throw Error(Errc::SpectralMismatch, "no eigenvalue near (" + std::to_string(target.real()) + ") to cancel");
  }
  values.erase(best);
}

}  // namespace

ExactRationalFunction grover_zeta(const Graph& g) {
  return ExactRationalFunction(ExactPolynomial::constant(1), reversed_charpoly(grover_matrix(g)));
}

ExactRationalFunction ihara_zeta(const Graph& g, IharaRoute route) {
  if (route == IharaRoute::EdgeMatrix) {
    return ExactRationalFunction(ExactPolynomial::constant(1), reversed_charpoly(edge_matrix(g)));
  }
  const auto n = static_cast<std::size_t>(g.vertex_count());
  PolynomialMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int d = g.degree(static_cast<int>(i));
    m(i, i) = ExactPolynomial({Rational(1), Rational(0), Rational(d - 1)});
  }
  for (const Edge& e : g.edges()) {
    const ExactPolynomial minus_u({Rational(0), Rational(-1)});
    m(static_cast<std::size_t>(e.lo), static_cast<std::size_t>(e.hi)) = minus_u;
    m(static_cast<std::size_t>(e.hi), static_cast<std::size_t>(e.lo)) = minus_u;
  }
  const ExactRationalFunction inverse =
      one_minus_u_squared_pow(g.betti_number() - 1) * ExactRationalFunction(poly_matrix_det(m));
  return inverse.reciprocal();
}

KonnoSatoReport verify_konno_sato(const Graph& g) {
  KonnoSatoReport report;
  report.lhs = reversed_charpoly(grover_matrix(g));
  const ExactPolynomial one_plus_u2({Rational(1), Rational(0), Rational(1)});
  const ExactPolynomial minus_2u({Rational(0), Rational(-2)});
  const ExactPolynomial det = poly_matrix_det(PolynomialMatrix::affine(one_plus_u2, minus_2u, transition_matrix(g)));
  report.rhs = one_minus_u_squared_pow(g.edge_count() - g.vertex_count()) * ExactRationalFunction(det);
  report.difference = ExactRationalFunction(report.lhs) - report.rhs;
  report.holds = report.difference.numerator().is_zero();
  return report;
}

IharaRoutesReport verify_ihara_routes(const Graph& g) {
  IharaRoutesReport report;
  report.edge_route = ihara_zeta(g, IharaRoute::EdgeMatrix);
  report.bass_route = ihara_zeta(g, IharaRoute::Bass);
  const ExactMatrix support = positive_support(grover_matrix(g).transpose());
  report.support_route = ExactRationalFunction(ExactPolynomial::constant(1), reversed_charpoly(support));
  report.routes_agree = report.edge_route == report.bass_route;
  report.min_degree_at_least_two = g.min_degree() >= 2;
  report.support_equals_edge_matrix = support == edge_matrix(g);
  return report;
}

std::int64_t count_reduced_cycles(const Graph& g, int r) {
  if (r < 1) return 0;
  const ArcTable arcs(g);
  const auto size = static_cast<int>(arcs.size());
  // successors[e] = arcs f with o(f) == t(e), f != e^-1
  std::vector<std::vector<int>> successors(static_cast<std::size_t>(size));
  for (int e = 0; e < size; ++e)
    for (int f = 0; f < size; ++f)
      if (arcs[static_cast<std::size_t>(f)].origin == arcs[static_cast<std::size_t>(e)].terminus &&
          f != arcs[static_cast<std::size_t>(e)].inverse)
        successors[static_cast<std::size_t>(e)].push_back(f);

  std::int64_t count = 0;
  std::vector<int> path;
  path.reserve(static_cast<std::size_t>(r));
  auto extend = [&](auto&& self, int last) -> void {
    if (static_cast<int>(path.size()) == r) {
      // closing step last -> path[0] must be admissible too
      const auto& next = successors[static_cast<std::size_t>(last)];
      if (std::find(next.begin(), next.end(), path.front()) != next.end()) ++count;
      return;
    }
    for (int f : successors[static_cast<std::size_t>(last)]) {
      path.push_back(f);
      self(self, f);
      path.pop_back();
    }
  };
  for (int e = 0; e < size; ++e) {
    path.assign(1, e);
    extend(extend, e);
  }
  return count;
}

namespace {

std::int64_t count_rotation_classes(const Graph& g, int r) {
  const ArcTable arcs(g);
  const auto size = static_cast<int>(arcs.size());
  auto admissible = [&](int e, int f) {
    return arcs[static_cast<std::size_t>(f)].origin == arcs[static_cast<std::size_t>(e)].terminus &&
           f != arcs[static_cast<std::size_t>(e)].inverse;
  };
  std::set<std::vector<int>> classes;
  std::vector<int> path;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == r) {
      if (!admissible(path.back(), path.front())) return;
      std::vector<int> best = path;
      std::vector<int> rot = path;
      for (int k = 1; k < r; ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        best = std::min(best, rot);
      }
      classes.insert(std::move(best));
      return;
    }
    for (int f = 0; f < size; ++f) {
      if (!admissible(path.back(), f)) continue;
      path.push_back(f);
      self(self);
      path.pop_back();
    }
  };
  for (int e = 0; e < size; ++e) {
    path.assign(1, e);
    extend(extend);
  }
  return static_cast<std::int64_t>(classes.size());
}

}  // namespace

IharaSeriesReport verify_ihara_series(const Graph& g, int r_max) {
  if (r_max < 1 || r_max > 8) throw Error(Errc::InvalidParameter, "r_max must lie in [1, 8]");
  IharaSeriesReport report;
  report.r_max = r_max;
  const PowerSeries log_z = series_log(ihara_zeta(g, IharaRoute::Bass), r_max + 1);
  report.max_discrepancy = 0;
  for (int r = 1; r <= r_max; ++r) {
    const std::int64_t count = count_reduced_cycles(g, r);
    report.cycle_counts.push_back(count);
    report.rotation_classes.push_back(count_rotation_classes(g, r));
    const Rational coefficient = log_z[static_cast<std::size_t>(r)] * r;
    report.log_coefficients.push_back(coefficient);
    Rational gap = abs(coefficient - Rational(static_cast<long>(count)));
    if (gap > report.max_discrepancy) report.max_discrepancy = gap;
  }
  report.holds = sgn(report.max_discrepancy) == 0;
  return report;
}

int SpectrumReport::total_multiplicity() const {
  int total = 0;
  for (const auto& c : clusters) total += c.multiplicity;
  return total;
}

std::vector<SpectralCluster> cluster_eigenvalues(const std::vector<std::complex<double>>& values, double tolerance) {
  struct Acc {
    std::complex<double> sum;
    int count;
  };
  std::vector<Acc> acc;
  for (const auto& v : values) {
    bool placed = false;
    for (auto& a : acc) {
      if (std::abs(a.sum / static_cast<double>(a.count) - v) <= tolerance) {
        a.sum += v;
        ++a.count;
        placed = true;
        break;
      }
    }
    if (!placed) acc.push_back({v, 1});
  }
  std::vector<SpectralCluster> clusters;
  clusters.reserve(acc.size());
  for (const auto& a : acc) {
    std::complex<double> c = a.sum / static_cast<double>(a.count);
    // snap signed zeros and roundoff residue so printing is stable
    if (std::abs(c.real()) < 1e-13) c.real(0.0);
    if (std::abs(c.imag()) < 1e-13) c.imag(0.0);
    clusters.push_back({c, a.count});
  }
  std::sort(clusters.begin(), clusters.end(), [tolerance](const SpectralCluster& x, const SpectralCluster& y) {
    if (std::abs(x.value.real() - y.value.real()) > tolerance) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return clusters;
}

SpectrumReport spectrum(const Graph& g, double tolerance) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(to_eigen(grover_matrix(g)), false);
  const auto& ev = solver.eigenvalues();
  std::vector<std::complex<double>> values(ev.data(), ev.data() + ev.size());
  return {cluster_eigenvalues(values, tolerance), SpectrumSource::Direct, tolerance};
}

SpectrumReport transition_spectrum(const Graph& g, double tolerance) {
  std::vector<std::complex<double>> values;
  for (double mu : symmetric_transition_eigenvalues(g)) values.emplace_back(mu, 0.0);
  return {cluster_eigenvalues(values, tolerance), SpectrumSource::Transition, tolerance};
}

SpectrumReport spectrum_via_konno_sato(const Graph& g, double tolerance) {
  std::vector<std::complex<double>> values;
  for (double mu : symmetric_transition_eigenvalues(g)) {
    mu = std::clamp(mu, -1.0, 1.0);
    // sqrt amplifies roundoff near the double roots at +-1
    if (1.0 - std::abs(mu) < 1e-12) mu = mu > 0 ? 1.0 : -1.0;
    const double im = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    values.emplace_back(mu, im);
    values.emplace_back(mu, -im);
  }
  const int excess = g.edge_count() - g.vertex_count();
  for (int k = 0; k < std::abs(excess); ++k) {
    if (excess > 0) {
      values.emplace_back(1.0, 0.0);
      values.emplace_back(-1.0, 0.0);
    } else {
      remove_nearest(values, {1.0, 0.0}, tolerance);
      remove_nearest(values, {-1.0, 0.0}, tolerance);
    }
  }
  return {cluster_eigenvalues(values, tolerance), SpectrumSource::KonnoSatoMapped, tolerance};
}

bool spectra_match(const SpectrumReport& a, const std::vector<SpectralCluster>& expected, double tolerance) {
  if (a.clusters.size() != expected.size()) return false;
  std::vector<bool> used(expected.size(), false);
  for (const auto& c : a.clusters) {
    bool found = false;
    for (std::size_t j = 0; j < expected.size(); ++j) {
      if (used[j] || expected[j].multiplicity != c.multiplicity) continue;
      if (std::abs(expected[j].value - c.value) <= tolerance) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool spectra_match(const SpectrumReport& a, const SpectrumReport& b, double tolerance) {
  return spectra_match(a, b.clusters, tolerance);
}

void verify_spectral_mapping(const Graph& g, double tolerance) {
  const SpectrumReport direct = spectrum(g, tolerance);
  const SpectrumReport mapped = spectrum_via_konno_sato(g, tolerance);
  if (!spectra_match(direct, mapped, tolerance)) {
    throw Error(Errc::SpectralMismatch, "direct and Konno-Sato mapped spectra differ (" +
                                            std::to_string(direct.clusters.size()) + " vs " +
                                            std::to_string(mapped.clusters.size()) + " clusters)");
  }
}

AutomorphyCertificate automorphic_weight(const Graph& g) {
  const ExactMatrix u = grover_matrix(g);
  const Rational det = det_exact(u);
  if (det != 1 && det != -1) throw Error(Errc::CertificateFailed, "det U = " + to_string(det) + " is not +-1");
  const int two_m = 2 * g.edge_count();

  AutomorphyCertificate cert;
  cert.sign = det > 0 ? 1 : -1;
  cert.weight = -two_m;

  // zeta(1/u) = C u^{2m} zeta(u)  <=>  p(u) = C u^{2m} p(1/u) for p = det(I - uU)
  const ExactPolynomial p = reversed_charpoly(u);
  cert.exact_identity = p.degree() == two_m && p == p.reversed(two_m) * det;

  const ExactRationalFunction zeta = ExactRationalFunction(ExactPolynomial::constant(1), p);
  for (double x : {2.0, 3.5, 10.0}) {
    const std::complex<double> lhs = zeta.evaluate(1.0 / x);
    const std::complex<double> rhs = static_cast<double>(cert.sign) * std::pow(x, two_m) * zeta.evaluate(x);
    cert.max_residual = std::max(cert.max_residual, std::abs(lhs - rhs) / std::abs(lhs));
  }
  if (!cert.exact_identity || cert.max_residual > 1e-10) {
    throw Error(Errc::CertificateFailed, "automorphy identity fails (residual " + std::to_string(cert.max_residual) + ")");
  }
  return cert;
}

}  // namespace azw
