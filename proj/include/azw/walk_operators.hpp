#pragma once

#include "azw/exact_matrix.hpp"
#include "azw/graph.hpp"

namespace azw {

/// Grover (flip-flop) evolution matrix, 2m x 2m, indexed by the canonical
/// ArcTable:  U(e,f) = 2/d_{o(e)} - [f == e^-1]  when t(f) == o(e), else 0.
/// Real orthogonal.
ExactMatrix grover_matrix(const Graph& g);

/// Simple random walk: P(u,v) = 1/deg(u) for adjacent u, v.
ExactMatrix transition_matrix(const Graph& g);

struct AdjacencyDegree {
  ExactMatrix adjacency;
  ExactMatrix degree;
};

AdjacencyDegree adjacency_and_degree(const Graph& g);

/// Non-backtracking (Hashimoto) arc matrix: B(e,f) = 1 iff t(e) == o(f) and
/// f != e^-1. Row e sums to d_{t(e)} - 1. Equals positive_support(U^T)
/// exactly when every vertex has degree >= 2; on pendant vertices the
/// backtracking Grover entry 2/1 - 1 = 1 is positive and the two differ.
ExactMatrix edge_matrix(const Graph& g);

}  // namespace azw
