#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace azw {

/// Undirected edge with endpoints stored low-first.
struct Edge {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple connected undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept sorted lexicographically by
/// (lo, hi), which fixes the arc numbering used by every matrix downstream.
/// Trees and graphs with pendant vertices are accepted; operations that need
/// min degree >= 2 check it themselves.
class Graph {
 public:
  /// Validates and builds. Throws Error with SelfLoop, DuplicateEdge,
  /// Disconnected, IndexOutOfRange or InvalidParameter (n < 1).
  static Graph build(int n, std::span<const std::pair<int, int>> edges);
  static Graph build(int n, std::initializer_list<std::pair<int, int>> edges) {
    return build(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int degree(int v) const { return degrees_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  bool adjacent(int u, int v) const;

  int min_degree() const noexcept;
  int max_degree() const noexcept;
  bool is_regular() const noexcept { return min_degree() == max_degree(); }
  /// Cycle-space dimension m - n + 1 (zero for trees).
  int betti_number() const noexcept { return edge_count() - n_ + 1; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> adjacency_;
};

/// Oriented edge. `inverse` is the index of the reversed arc.
struct Arc {
  int origin = 0;
  int terminus = 0;
  int inverse = 0;
};

/// The 2m arcs of a graph in canonical order: arc 2i is (lo, hi) of edge i,
/// arc 2i+1 is (hi, lo). Hence inverse(k) == k ^ 1.
class ArcTable {
 public:
  explicit ArcTable(const Graph& g);

  std::size_t size() const noexcept { return arcs_.size(); }
  const Arc& operator[](std::size_t k) const { return arcs_.at(k); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  auto begin() const noexcept { return arcs_.begin(); }
  auto end() const noexcept { return arcs_.end(); }

 private:
  std::vector<Arc> arcs_;
};

inline ArcTable arc_table(const Graph& g) { return ArcTable(g); }

enum class GraphFamily { Cycle, Path, Complete, CompleteBipartite, Star, Petersen };

GraphFamily parse_family(std::string_view name);
std::string_view family_name(GraphFamily family) noexcept;

/// Canonical labelled member of a standard family.
///   cycle n (n >= 3), path n (n >= 2), complete n (n >= 2),
///   complete_bipartite p q (p, q >= 1), star k (K_{1,k}, k >= 1), petersen.
/// Throws Error(InvalidParameter) on bad parameter count or bounds.
Graph generate(GraphFamily family, std::span<const int> params = {});
inline Graph generate(GraphFamily family, std::initializer_list<int> params) {
  return generate(family, std::span<const int>(params.begin(), params.size()));
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// K2, C3..C8, K4, K5, K3,3, S5 = K_{1,5}, Petersen, in that order.
std::vector<NamedGraph> builtin_corpus();

}  // namespace azw
