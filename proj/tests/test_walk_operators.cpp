#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "azw/errors.hpp"
#include "azw/exact_matrix.hpp"
#include "azw/graph.hpp"
#include "azw/json_io.hpp"
#include "azw/walk_operators.hpp"

using namespace azw;

namespace {

const Graph& k2() {
  static const Graph g = Graph::build(2, {{0, 1}});
  return g;
}

Rational row_sum(const ExactMatrix& m, std::size_t i) { return m.row_sum(i); }

// Arc index of (o, t), looked up in the table.
std::size_t arc_index(const ArcTable& t, int o, int term) {
  for (std::size_t k = 0; k < t.size(); ++k)
    if (t[k].origin == o && t[k].terminus == term) return k;
  FAIL("arc not found");
  return 0;
}

// Non-backtracking matrix built straight from its definition over vertex
// triples: B[(a->b), (b->c)] = 1 for c != a.
ExactMatrix brute_force_edge_matrix(const Graph& g) {
  const ArcTable t(g);
  ExactMatrix b(t.size(), t.size());
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int mid : g.neighbors(a))
      for (int c : g.neighbors(mid))
        if (c != a) b(arc_index(t, a, mid), arc_index(t, mid, c)) = 1;
  return b;
}

}  // namespace

TEST_CASE("grover matrix of K2 is the swap") {
  CHECK(grover_matrix(k2()) == ExactMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("grover matrix of C4 matches the block-circulant display") {
  // Arc order of the display: block j holds (j -> j-1), (j -> j+1).
  // Block row j has P = diag(1,0) in block column j+1 and Q = diag(0,1) in j-1.
  const int n = 4;
  const Graph g = generate(GraphFamily::Cycle, {n});
  const ArcTable t(g);
  const ExactMatrix u = grover_matrix(g);
  auto display_arc = [&](int block, int slot) {
    const int to = slot == 0 ? (block + n - 1) % n : (block + 1) % n;
    return arc_index(t, block, to);
  };
  for (int bi = 0; bi < n; ++bi) {
    for (int si = 0; si < 2; ++si) {
      for (int bj = 0; bj < n; ++bj) {
        for (int sj = 0; sj < 2; ++sj) {
          int expected = 0;
          if (bj == (bi + 1) % n && si == 0 && sj == 0) expected = 1;
          if (bj == (bi + n - 1) % n && si == 1 && sj == 1) expected = 1;
          CHECK(u(display_arc(bi, si), display_arc(bj, sj)) == expected);
        }
      }
    }
  }
}

TEST_CASE("grover matrix entries follow 2/d - delta") {
  const Graph g = generate(GraphFamily::Star, {3});
  const ArcTable t(g);
  const ExactMatrix u = grover_matrix(g);
  // leaf arc (1 -> 0) then centre arc (0 -> 2): o(e) = 0 has degree 3
  const auto e = arc_index(t, 0, 2);
  CHECK(u(e, arc_index(t, 1, 0)) == ratio(2, 3));
  CHECK(u(e, arc_index(t, 2, 0)) == ratio(-1, 3));
  // at a leaf the backtracking entry is 2/1 - 1 = 1
  CHECK(u(arc_index(t, 1, 0), arc_index(t, 0, 1)) == 1);
}

TEST_CASE("grover matrix is exactly orthogonal with det in {-1, 1}") {
  for (const auto& ng : builtin_corpus()) {
    CAPTURE(ng.name);
    const ExactMatrix u = grover_matrix(ng.graph);
    CHECK(u.transpose() * u == ExactMatrix::identity(u.rows()));
    const Rational d = det_exact(u);
    CHECK((d == 1 || d == -1));
  }
}

TEST_CASE("transition matrix") {
  const Graph c4 = generate(GraphFamily::Cycle, {4});
  const ExactMatrix p = transition_matrix(c4);
  const AdjacencyDegree ad = adjacency_and_degree(c4);
  CHECK(p == ad.adjacency * ratio(1, 2));
  CHECK(transition_matrix(k2()) == ExactMatrix{{0, 1}, {1, 0}});
  for (const auto& ng : builtin_corpus()) {
    const ExactMatrix q = transition_matrix(ng.graph);
    for (std::size_t i = 0; i < q.rows(); ++i) CHECK(row_sum(q, i) == 1);
  }
}

TEST_CASE("adjacency and degree") {
  const AdjacencyDegree c4 = adjacency_and_degree(generate(GraphFamily::Cycle, {4}));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int diff = (j - i + 4) % 4;
      CHECK(c4.adjacency(i, j) == ((diff == 1 || diff == 3) ? 1 : 0));
    }
  }
  CHECK(c4.degree == ExactMatrix::identity(4) * Rational(2));

  const AdjacencyDegree two = adjacency_and_degree(k2());
  CHECK(two.adjacency == ExactMatrix{{0, 1}, {1, 0}});
  CHECK(two.degree == ExactMatrix::identity(2));

  const AdjacencyDegree pet = adjacency_and_degree(generate(GraphFamily::Petersen));
  for (std::size_t i = 0; i < 10; ++i) CHECK(pet.adjacency.row_sum(i) == 3);
  CHECK(pet.degree == ExactMatrix::identity(10) * Rational(3));
  CHECK(pet.adjacency == pet.adjacency.transpose());
}

TEST_CASE("positive support") {
  const ExactMatrix m{{ratio(1, 2), ratio(-1, 2)}, {0, 2}};
  CHECK(positive_support(m) == ExactMatrix{{1, 0}, {0, 1}});
  CHECK(positive_support(grover_matrix(k2())) == ExactMatrix{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(positive_support(ExactMatrix(2, 3)), Error);
}

TEST_CASE("edge matrix: small cases") {
  CHECK(edge_matrix(k2()) == ExactMatrix(2, 2));
  CHECK(positive_support(grover_matrix(k2())) != edge_matrix(k2()));

  const ExactMatrix c3 = edge_matrix(generate(GraphFamily::Cycle, {3}));
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(c3.row_sum(i) == 1);
    CHECK(c3.col_sum(i) == 1);
  }
  const ExactMatrix k4 = edge_matrix(generate(GraphFamily::Complete, {4}));
  for (std::size_t i = 0; i < 12; ++i) CHECK(k4.row_sum(i) == 2);
}

TEST_CASE("edge matrix: brute force and row sums d(t(e)) - 1") {
  for (const auto& ng : builtin_corpus()) {
    CAPTURE(ng.name);
    const ExactMatrix b = edge_matrix(ng.graph);
    CHECK(b == brute_force_edge_matrix(ng.graph));
    const ArcTable t(ng.graph);
    for (std::size_t k = 0; k < t.size(); ++k) CHECK(b.row_sum(k) == ng.graph.degree(t[k].terminus) - 1);
  }
}

TEST_CASE("edge matrix equals positive support of U^T iff min degree >= 2") {
  for (const auto& ng : builtin_corpus()) {
    CAPTURE(ng.name);
    const bool same = positive_support(grover_matrix(ng.graph).transpose()) == edge_matrix(ng.graph);
    CHECK(same == (ng.graph.min_degree() >= 2));
  }
}

TEST_CASE("det_exact") {
  CHECK(det_exact(grover_matrix(generate(GraphFamily::Cycle, {4}))) == 1);
  CHECK(det_exact(ExactMatrix{{0, 1}, {1, 0}}) == -1);
  for (std::size_t n : {1u, 3u, 7u}) CHECK(det_exact(ExactMatrix::identity(n)) == 1);
  CHECK(det_exact(ExactMatrix{{ratio(1, 2), 3}, {ratio(2, 3), 5}}) == ratio(1, 2));
  CHECK(det_exact(ExactMatrix{{0, 0, 1}, {0, 2, 0}, {3, 0, 0}}) == -6);
  CHECK(det_exact(ExactMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(det_exact(ExactMatrix(2, 3)), Error);
}

TEST_CASE("matrix JSON") {
  const ExactMatrix m{{ratio(2, 4), -1}, {0, ratio(-6, 9)}};
  const Json j = matrix_to_json(m);
  CHECK(j.dump() == R"({"rows":2,"cols":2,"entries":["1/2","-1","0","-2/3"]})");
  CHECK(matrix_from_json(j) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":2,"cols":2,"entries":["1"]})")), Error);
}
