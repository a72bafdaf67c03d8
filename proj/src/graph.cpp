#include "azw/graph.hpp"

#include <algorithm>
#include <queue>

#include "azw/errors.hpp"

namespace azw {

Graph Graph::build(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1) throw Error(Errc::InvalidParameter, "vertex count must be positive");

  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(Errc::IndexOutOfRange,
                  "edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside [0," + std::to_string(n) + ")");
    }
    if (u == v) throw Error(Errc::SelfLoop, "loop at vertex " + std::to_string(u));
    g.edges_.push_back(Edge{std::min(u, v), std::max(u, v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(Errc::DuplicateEdge, "edge {" + std::to_string(dup->lo) + "," + std::to_string(dup->hi) + "} repeated");
  }

  g.degrees_.assign(static_cast<std::size_t>(n), 0);
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : g.edges_) {
    ++g.degrees_[static_cast<std::size_t>(e.lo)];
    ++g.degrees_[static_cast<std::size_t>(e.hi)];
    g.adjacency_[static_cast<std::size_t>(e.lo)].push_back(e.hi);
    g.adjacency_[static_cast<std::size_t>(e.hi)].push_back(e.lo);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : g.adjacency_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  if (reached != n) {
    throw Error(Errc::Disconnected, "only " + std::to_string(reached) + " of " + std::to_string(n) +
                                        " vertices reachable from vertex 0");
  }
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const noexcept {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

int Graph::max_degree() const noexcept {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

ArcTable::ArcTable(const Graph& g) {
  arcs_.reserve(2 * g.edges().size());
  int k = 0;
  for (const Edge& e : g.edges()) {
    arcs_.push_back(Arc{e.lo, e.hi, k + 1});
    arcs_.push_back(Arc{e.hi, e.lo, k});
    k += 2;
  }
}

GraphFamily parse_family(std::string_view name) {
  if (name == "cycle") return GraphFamily::Cycle;
  if (name == "path") return GraphFamily::Path;
  if (name == "complete") return GraphFamily::Complete;
  if (name == "complete_bipartite") return GraphFamily::CompleteBipartite;
  if (name == "star") return GraphFamily::Star;
  if (name == "petersen") return GraphFamily::Petersen;
  throw Error(Errc::InvalidParameter, "unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(GraphFamily family) noexcept {
  switch (family) {
    case GraphFamily::Cycle: return "cycle";
    case GraphFamily::Path: return "path";
    case GraphFamily::Complete: return "complete";
    case GraphFamily::CompleteBipartite: return "complete_bipartite";
    case GraphFamily::Star: return "star";
    case GraphFamily::Petersen: return "petersen";
  }
  return "unknown";
}

namespace {

void expect_params(GraphFamily family, std::span<const int> params, std::size_t count) {
  if (params.size() != count) {
    throw Error(Errc::InvalidParameter, std::string(family_name(family)) + " takes " + std::to_string(count) +
                                            " parameter(s), got " + std::to_string(params.size()));
  }
}

void expect_at_least(GraphFamily family, int value, int bound) {
  if (value < bound) {
    throw Error(Errc::InvalidParameter,
                std::string(family_name(family)) + " parameter must be >= " + std::to_string(bound));
  }
}

}  // namespace

Graph generate(GraphFamily family, std::span<const int> params) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case GraphFamily::Cycle: {
      expect_params(family, params, 1);
      const int n = params[0];
      expect_at_least(family, n, 3);
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      return Graph::build(n, edges);
    }
    case GraphFamily::Path: {
      expect_params(family, params, 1);
      const int n = params[0];
      expect_at_least(family, n, 2);
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return Graph::build(n, edges);
    }
    case GraphFamily::Complete: {
      expect_params(family, params, 1);
      const int n = params[0];
      expect_at_least(family, n, 2);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      return Graph::build(n, edges);
    }
    case GraphFamily::CompleteBipartite: {
      expect_params(family, params, 2);
      const int p = params[0];
      const int q = params[1];
      expect_at_least(family, p, 1);
      expect_at_least(family, q, 1);
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) edges.emplace_back(i, p + j);
      return Graph::build(p + q, edges);
    }
    case GraphFamily::Star: {
      expect_params(family, params, 1);
      const int k = params[0];
      expect_at_least(family, k, 1);
      for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
      return Graph::build(k + 1, edges);
    }
    case GraphFamily::Petersen: {
      expect_params(family, params, 0);
      // outer 5-cycle 0..4, spokes i -> i+5, inner pentagram 5..9
      for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      }
      return Graph::build(10, edges);
    }
  }
  throw Error(Errc::InvalidParameter, "unknown graph family");
}

std::vector<NamedGraph> builtin_corpus() {
  std::vector<NamedGraph> corpus;
  corpus.push_back({"K2", generate(GraphFamily::Complete, {2})});
  for (int n = 3; n <= 8; ++n) corpus.push_back({"C" + std::to_string(n), generate(GraphFamily::Cycle, {n})});
  corpus.push_back({"K4", generate(GraphFamily::Complete, {4})});
  corpus.push_back({"K5", generate(GraphFamily::Complete, {5})});
  corpus.push_back({"K3,3", generate(GraphFamily::CompleteBipartite, {3, 3})});
  corpus.push_back({"S5", generate(GraphFamily::Star, {5})});
  corpus.push_back({"Petersen", generate(GraphFamily::Petersen)});
  return corpus;
}

}  // namespace azw
