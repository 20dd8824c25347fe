#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cayley {

using Vertex = std::int32_t;

/// Unordered vertex pair, stored with u < w.
struct Edge {
  Vertex u = 0;
  Vertex w = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), w(a < b ? b : a) {}

  constexpr bool contains(Vertex v) const { return u == v || w == v; }
  constexpr Vertex other(Vertex v) const { return v == u ? w : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Undirected simple graph on vertices 0..n-1. Immutable once built; every
/// "mutating" operation returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  /// Throws Error(InvalidGraph) on self-loops, duplicates or ids out of range.
  Graph(int vertex_count, std::span<const Edge> edges);
  Graph(int vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.w); }
  /// Position of e in edges(), or -1.
  std::ptrdiff_t edge_index(const Edge& e) const;

  bool is_connected() const;

  Graph with_edge(const Edge& e) const;
  Graph with_edges(std::span<const Edge> extra) const;
  Graph without_edge(const Edge& e) const;

  /// Subgraph induced by `keep`; vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;
  /// Deletes the given vertices and re-densifies the remaining ids in order.
  /// If `old_ids` is non-null it receives new-id -> old-id.
  Graph without_vertices(std::span<const Vertex> drop,
                         std::vector<Vertex>* old_ids = nullptr) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Named small graphs used throughout tests and as minor targets.
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);

bool is_triangle_free(const Graph& g);

/// Identifies the endpoints of e. The survivor keeps the smaller id; ids above
/// the removed endpoint shift down by one. Parallel edges and loops vanish.
Graph contract_edge(const Graph& g, const Edge& e);

}  // namespace cayley

template <>
struct std::hash<cayley::Edge> {
  std::size_t operator()(const cayley::Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
        static_cast<std::uint32_t>(e.w));
  }
};
