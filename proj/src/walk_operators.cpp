#include "azw/walk_operators.hpp"

namespace azw {

ExactMatrix grover_matrix(const Graph& g) {
  const ArcTable arcs(g);
  const std::size_t size = arcs.size();
  ExactMatrix u(size, size);
  for (std::size_t e = 0; e < size; ++e) {
    const int origin = arcs[e].origin;
    const Rational weight = ratio(2, g.degree(origin));
    for (std::size_t f = 0; f < size; ++f) {
      if (arcs[f].terminus != origin) continue;
      u(e, f) = weight;
      if (static_cast<int>(f) == arcs[e].inverse) u(e, f) -= 1;
    }
  }
  return u;
}

ExactMatrix transition_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ExactMatrix p(n, n);
  for (const Edge& e : g.edges()) {
    p(static_cast<std::size_t>(e.lo), static_cast<std::size_t>(e.hi)) = ratio(1, g.degree(e.lo));
    p(static_cast<std::size_t>(e.hi), static_cast<std::size_t>(e.lo)) = ratio(1, g.degree(e.hi));
  }
  return p;
}

AdjacencyDegree adjacency_and_degree(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  AdjacencyDegree out{ExactMatrix(n, n), ExactMatrix(n, n)};
  for (const Edge& e : g.edges()) {
    out.adjacency(static_cast<std::size_t>(e.lo), static_cast<std::size_t>(e.hi)) = 1;
    out.adjacency(static_cast<std::size_t>(e.hi), static_cast<std::size_t>(e.lo)) = 1;
  }
  for (std::size_t v = 0; v < n; ++v) out.degree(v, v) = g.degree(static_cast<int>(v));
  return out;
}

ExactMatrix edge_matrix(const Graph& g) {
  const ArcTable arcs(g);
  const std::size_t size = arcs.size();
  ExactMatrix b(size, size);
  for (std::size_t e = 0; e < size; ++e) {
    for (std::size_t f = 0; f < size; ++f) {
      if (arcs[e].terminus == arcs[f].origin && static_cast<int>(f) != arcs[e].inverse) b(e, f) = 1;
    }
  }
  return b;
}

}  // namespace azw
