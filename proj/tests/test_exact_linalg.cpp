#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "azw/errors.hpp"
#include "azw/exact_linalg.hpp"
#include "azw/graph.hpp"
#include "azw/json_io.hpp"
#include "azw/walk_operators.hpp"

using namespace azw;

namespace {

const ExactPolynomial u = ExactPolynomial::monomial(1, 1);
const ExactPolynomial one = ExactPolynomial::constant(1);

ExactMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ratio(num(rng), den(rng));
  return m;
}

// Laplace expansion along the first row; only for tiny matrices.
ExactPolynomial cofactor_det(const PolynomialMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m(0, 0);
  ExactPolynomial total;
  for (std::size_t j = 0; j < n; ++j) {
    PolynomialMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const ExactPolynomial term = m(0, j) * cofactor_det(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

ExactMatrix matrix_polynomial(const ExactPolynomial& p, const ExactMatrix& m) {
  ExactMatrix acc(m.rows(), m.cols());
  for (int k = p.degree(); k >= 0; --k) acc = acc * m + ExactMatrix::identity(m.rows()) * p.coeff(k);
  return acc;
}

}  // namespace

TEST_CASE("polynomial basics") {
  const ExactPolynomial p{1, 0, -1};
  CHECK(p.degree() == 2);
  CHECK(p == one - u * u);
  CHECK(ExactPolynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(ExactPolynomial{}.degree() == -1);
  CHECK(ExactPolynomial{0, 0}.is_zero());
  CHECK(ExactPolynomial::cyclic(3) == ExactPolynomial{-1, 0, 0, 1});
  CHECK(pow(one + u, 3) == ExactPolynomial{1, 3, 3, 1});
  CHECK(p(ratio(1, 2)) == ratio(3, 4));
  CHECK(ExactPolynomial{0, 0, 3, 1}.lowest_power() == 2);
  CHECK(ExactPolynomial{1, 2, 3}.reversed(4) == ExactPolynomial{0, 0, 3, 2, 1});
  CHECK(ExactPolynomial{1, 2, 3}.derivative() == ExactPolynomial{2, 6});

  const auto [q, r] = divmod(ExactPolynomial{-1, 0, 0, 1}, ExactPolynomial{-1, 1});
  CHECK(q == ExactPolynomial{1, 1, 1});
  CHECK(r.is_zero());
  CHECK(gcd(ExactPolynomial{-1, 0, 1} * Rational(3), ExactPolynomial{-1, 0, 0, 1}) == ExactPolynomial{-1, 1});
  ExactPolynomial out;
  CHECK_FALSE(divides_exactly(ExactPolynomial{1, 0, 1}, ExactPolynomial{-1, 1}, out));
}

TEST_CASE("rational functions are reduced with a monic denominator") {
  const ExactRationalFunction f(ExactPolynomial{-1, 1}, ExactPolynomial{-2, 0, 2});
  CHECK(f.numerator() == ExactPolynomial{ratio(1, 2)});
  CHECK(f.denominator() == ExactPolynomial{1, 1});
  const ExactRationalFunction g(ExactPolynomial{1}, ExactPolynomial{1, 0, -1});
  CHECK(g.numerator() == ExactPolynomial{-1});
  CHECK(g.denominator() == ExactPolynomial{-1, 0, 1});
  CHECK(f * f.reciprocal() == ExactRationalFunction(one));
  CHECK(f + f == f * ExactRationalFunction(ExactPolynomial{2}));
  CHECK(pow(f, -2) == f.reciprocal() * f.reciprocal());
  CHECK_THROWS_AS(ExactRationalFunction(one, ExactPolynomial{}), Error);
}

TEST_CASE("reversed charpoly examples") {
  CHECK(reversed_charpoly(ExactMatrix{{0, 1}, {1, 0}}) == one - u * u);
  const ExactPolynomial c3 = one - pow(u, 3);
  CHECK(reversed_charpoly(grover_matrix(generate(GraphFamily::Cycle, {3}))) == c3 * c3);
  CHECK(reversed_charpoly(ExactMatrix::identity(3)) == pow(one - u, 3));
  CHECK_THROWS_AS(reversed_charpoly(ExactMatrix(2, 3)), Error);
}

TEST_CASE("reversed charpoly: value at rational points equals det(I - rM)") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    const ExactMatrix m = random_matrix(rng, n);
    const ExactPolynomial p = reversed_charpoly(m);
    CHECK(p.coeff(0) == 1);
    CHECK(p.degree() <= static_cast<int>(n));
    for (const Rational& r : {ratio(1, 3), Rational(-2), ratio(5, 7)}) {
      CHECK(p(r) == det_exact(ExactMatrix::identity(n) - m * r));
    }
  }
}

TEST_CASE("charpoly satisfies Cayley-Hamilton") {
  std::mt19937 rng(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    const ExactMatrix m = random_matrix(rng, n);
    const ExactPolynomial c = charpoly(m);
    CHECK(c.degree() == static_cast<int>(n));
    CHECK(c.leading() == 1);
    CHECK(matrix_polynomial(c, m) == ExactMatrix(n, n));
  }
}

TEST_CASE("orthogonal symmetry: u^N p(1/u) = (-1)^N det(M) p_{M^T}(u)") {
  for (const auto& ng : builtin_corpus()) {
    CAPTURE(ng.name);
    const ExactMatrix m = grover_matrix(ng.graph);
    const int n = static_cast<int>(m.rows());
    const ExactPolynomial lhs = reversed_charpoly(m).reversed(n);
    const Rational sign = (n % 2 == 0 ? 1 : -1) * det_exact(m);
    CHECK(lhs == reversed_charpoly(m.transpose()) * sign);
  }
}

TEST_CASE("poly_matrix_det examples") {
  const ExactPolynomial a = one + u * u;
  PolynomialMatrix m(2);
  m(0, 0) = a;
  m(0, 1) = -u;
  m(1, 0) = -u;
  m(1, 1) = a;
  CHECK(poly_matrix_det(m) == a * a - u * u);

  const ExactPolynomial two_u = u * Rational(-2);
  const ExactMatrix pk2 = transition_matrix(Graph::build(2, {{0, 1}}));
  CHECK(poly_matrix_det(PolynomialMatrix::affine(a, two_u, pk2)) == pow(one - u * u, 2));

  const ExactMatrix pc4 = transition_matrix(generate(GraphFamily::Cycle, {4}));
  CHECK(poly_matrix_det(PolynomialMatrix::affine(a, two_u, pc4)) == pow(one - u * u, 2) * pow(a, 2));
}

TEST_CASE("poly_matrix_det agrees with reversed_charpoly on 20 random I - uM") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = size(rng);
    const ExactMatrix m = random_matrix(rng, n);
    const PolynomialMatrix pm = PolynomialMatrix::affine(one, -u, m);
    const ExactPolynomial det = poly_matrix_det(pm);
    CHECK(det == reversed_charpoly(m));
    CHECK(poly_matrix_det(pm, 17) == det);
    CHECK(poly_matrix_det(pm, -5) == det);
  }
}

TEST_CASE("poly_matrix_det agrees with cofactor expansion on mixed entries") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    PolynomialMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = ExactPolynomial{c(rng), c(rng), ratio(c(rng), 3)};
    CHECK(poly_matrix_det(m) == cofactor_det(m));
  }
}

TEST_CASE("interpolate recovers a polynomial") {
  const ExactPolynomial p{3, ratio(-1, 2), 0, 7};
  std::vector<Rational> xs, ys;
  for (int x : {-3, 0, 2, 9}) {
    xs.emplace_back(x);
    ys.push_back(p(Rational(x)));
  }
  CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("rational function evaluation") {
  const ExactRationalFunction f(one, pow(ExactPolynomial::cyclic(3), 2));
  CHECK(std::abs(rational_function_eval(f, 2.0) - std::complex<double>(1.0 / 49.0)) <= 1e-15);
  CHECK_THROWS_AS(rational_function_eval(f, 1.0), Error);
  try {
    rational_function_eval(f, 1.0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PoleAt);
  }
  const ExactRationalFunction g(one - u * u);
  CHECK(std::abs(rational_function_eval(g, {0.0, 1.0}) - std::complex<double>(2.0)) <= 1e-15);
  CHECK(f(Rational(2)) == ratio(1, 49));
}

TEST_CASE("power series log") {
  // log(1/(1-u)) = sum u^k / k
  const PowerSeries s = series_log(ExactRationalFunction(one, one - u), 6);
  for (int k = 1; k < 6; ++k) CHECK(s[static_cast<std::size_t>(k)] == ratio(1, k));
  CHECK(s[0] == 0);
  // log((1+u)^3) = 3 log(1+u)
  const PowerSeries t = series_log(to_series(pow(one + u, 3), 6), 6);
  for (int k = 1; k < 6; ++k) CHECK(t[static_cast<std::size_t>(k)] == ratio(k % 2 ? 3 : -3, k));
}

TEST_CASE("polynomial JSON") {
  const ExactPolynomial p{ratio(1, 2), 0, -3};
  const Json j = polynomial_to_json(p);
  CHECK(j.dump() == R"({"coeffs":["1/2","0","-3"]})");
  CHECK(polynomial_from_json(j) == p);
  CHECK(polynomial_from_json(Json::parse(R"({"coeffs":["2/4", 0, "-6/2"]})")) == p);
  const ExactRationalFunction f(one, ExactPolynomial{1, 1});
  CHECK(rational_function_from_json(rational_function_to_json(f)) == f);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"coeffs":["1/0"]})")), Error);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"coeffs":["x"]})")), Error);
}
