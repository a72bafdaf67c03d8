#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "azw/errors.hpp"
#include "azw/graph.hpp"
#include "azw/json_io.hpp"

using namespace azw;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an azw::Error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("build: smallest graph K2") {
  const Graph g = Graph::build(2, {{0, 1}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.degrees() == std::vector<int>{1, 1});
  CHECK(g.betti_number() == 0);
}

TEST_CASE("build: C4 from an unsorted edge list") {
  const Graph g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(g.edge_count() == 4);
  CHECK(g.is_regular());
  CHECK(g.min_degree() == 2);
  CHECK(g == generate(GraphFamily::Cycle, {4}));
}

TEST_CASE("build: validation errors") {
  CHECK(code_of([] { Graph::build(3, {{0, 1}, {0, 1}}); }) == Errc::DuplicateEdge);
  CHECK(code_of([] { Graph::build(3, {{0, 1}, {1, 0}}); }) == Errc::DuplicateEdge);
  CHECK(code_of([] { Graph::build(2, {{1, 1}}); }) == Errc::SelfLoop);
  CHECK(code_of([] { Graph::build(4, {{0, 1}, {2, 3}}); }) == Errc::Disconnected);
  CHECK(code_of([] { Graph::build(2, {{0, 2}}); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { Graph::build(2, {{-1, 0}}); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { Graph::build(0, {}); }) == Errc::InvalidParameter);
  CHECK(code_of([] { Graph::build(3, {}); }) == Errc::Disconnected);
}

TEST_CASE("build: single vertex is connected") {
  const Graph g = Graph::build(1, {});
  CHECK(g.edge_count() == 0);
}

TEST_CASE("generate: families") {
  const Graph k4 = generate(GraphFamily::Complete, {4});
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);

  const Graph p = generate(GraphFamily::Petersen);
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(p.is_regular());
  CHECK(p.degree(0) == 3);
  CHECK(p.betti_number() == 6);

  const Graph k33 = generate(GraphFamily::CompleteBipartite, {3, 3});
  CHECK(k33.edge_count() == 9);
  CHECK(k33.is_regular());

  const Graph star = generate(GraphFamily::Star, {5});
  CHECK(star.vertex_count() == 6);
  CHECK(star.max_degree() == 5);
  CHECK(star.min_degree() == 1);

  const Graph path = generate(GraphFamily::Path, {5});
  CHECK(path.edge_count() == 4);
  CHECK(path.betti_number() == 0);

  CHECK(code_of([] { generate(GraphFamily::Cycle, {2}); }) == Errc::InvalidParameter);
  CHECK(code_of([] { generate(GraphFamily::Cycle, {}); }) == Errc::InvalidParameter);
  CHECK(code_of([] { parse_family("hypercube"); }) == Errc::InvalidParameter);
  CHECK(parse_family("complete_bipartite") == GraphFamily::CompleteBipartite);
}

TEST_CASE("generate: Petersen has girth 5") {
  // no triangles or 4-cycles: adjacent vertices share no neighbour, and
  // non-adjacent vertices share exactly one
  const Graph p = generate(GraphFamily::Petersen);
  for (int u = 0; u < 10; ++u) {
    for (int v = u + 1; v < 10; ++v) {
      int common = 0;
      for (int w : p.neighbors(u)) common += p.adjacent(v, w) ? 1 : 0;
      CHECK(common == (p.adjacent(u, v) ? 0 : 1));
    }
  }
}

TEST_CASE("cycles are 2-regular") {
  for (int n = 3; n <= 12; ++n) {
    const Graph c = generate(GraphFamily::Cycle, {n});
    CHECK(std::all_of(c.degrees().begin(), c.degrees().end(), [](int d) { return d == 2; }));
  }
}

TEST_CASE("handshake: degree sum is 2m on the corpus") {
  for (const auto& ng : builtin_corpus()) {
    const auto& d = ng.graph.degrees();
    CHECK(std::accumulate(d.begin(), d.end(), 0) == 2 * ng.graph.edge_count());
  }
}

TEST_CASE("corpus contents") {
  const auto corpus = builtin_corpus();
  std::vector<std::string> names;
  for (const auto& ng : corpus) names.push_back(ng.name);
  CHECK(names == std::vector<std::string>{"K2", "C3", "C4", "C5", "C6", "C7", "C8", "K4", "K5", "K3,3", "S5",
                                          "Petersen"});
  std::size_t largest = 0;
  for (const auto& ng : corpus) largest = std::max<std::size_t>(largest, 2 * ng.graph.edge_count());
  CHECK(largest == 30);
}

TEST_CASE("arc table: K2") {
  const ArcTable t(Graph::build(2, {{0, 1}}));
  REQUIRE(t.size() == 2);
  CHECK(t[0].origin == 0);
  CHECK(t[0].terminus == 1);
  CHECK(t[1].origin == 1);
  CHECK(t[1].terminus == 0);
  CHECK(t[0].inverse == 1);
  CHECK(t[1].inverse == 0);
}

TEST_CASE("arc table: involution and endpoint swap") {
  for (const auto& ng : builtin_corpus()) {
    const ArcTable t(ng.graph);
    CHECK(t.size() == static_cast<std::size_t>(2 * ng.graph.edge_count()));
    for (std::size_t k = 0; k < t.size(); ++k) {
      const Arc& a = t[k];
      CHECK(a.inverse == static_cast<int>(k ^ 1u));
      CHECK(t[static_cast<std::size_t>(a.inverse)].inverse == static_cast<int>(k));
      CHECK(t[static_cast<std::size_t>(a.inverse)].origin == a.terminus);
      CHECK(t[static_cast<std::size_t>(a.inverse)].terminus == a.origin);
      if (k % 2 == 0) CHECK(a.origin < a.terminus);
    }
  }
}

TEST_CASE("arc table: independent of edge input order") {
  const Graph petersen = generate(GraphFamily::Petersen);
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : petersen.edges()) edges.emplace_back(e.hi, e.lo);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(edges.begin(), edges.end(), rng);
    const Graph g = Graph::build(10, edges);
    const ArcTable a(g);
    const ArcTable b(generate(GraphFamily::Petersen));
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].origin == b[k].origin);
      CHECK(a[k].terminus == b[k].terminus);
    }
  }
}

TEST_CASE("arc table: C4 has 8 arcs") { CHECK(ArcTable(generate(GraphFamily::Cycle, {4})).size() == 8); }

TEST_CASE("graph JSON round trip and rejection") {
  const Graph g = generate(GraphFamily::CompleteBipartite, {2, 3});
  const Json j = graph_to_json(g);
  CHECK(j.dump() == R"({"n":5,"edges":[[0,2],[0,3],[0,4],[1,2],[1,3],[1,4]]})");
  CHECK(graph_from_json(j) == g);
  CHECK(code_of([] { graph_from_json(Json::parse(R"({"n":4,"edges":[[0,1],[2,3]]})")); }) == Errc::Disconnected);
  CHECK(code_of([] { graph_from_json(Json::parse(R"({"n":2,"edges":[[0,1,2]]})")); }) == Errc::ParseError);
  CHECK(code_of([] { graph_from_json(Json::parse(R"({"edges":[]})")); }) == Errc::ParseError);
  CHECK(code_of([] { graph_from_json(Json::parse(R"({"n":2,"edges":[["0",1]]})")); }) == Errc::ParseError);
}
