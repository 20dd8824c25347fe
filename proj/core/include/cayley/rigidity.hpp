#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cayley/graph.hpp"

namespace cayley {

struct RigidityVerdict {
  /// Every edge is independent in the generic 2D rigidity matroid.
  bool independent = false;
  /// independent and |E| = 2|V| - 3.
  bool minimally_rigid = false;
  /// Vertex set whose induced subgraph has more than 2|V_s| - 3 edges;
  /// present iff !independent.
  std::optional<std::vector<Vertex>> violating_subgraph;
};

/// (2,3)-pebble game. Each vertex holds two pebbles; an edge is accepted when
/// four pebbles can be gathered on its endpoints, and then one of them is
/// spent covering it.
class PebbleGame {
 public:
  explicit PebbleGame(int vertex_count);

  /// Returns false (and leaves the edge out) if the edge is dependent on the
  /// edges accepted so far. In that case failed_closure() holds the vertex set
  /// that proves it.
  bool insert(const Edge& e);

  /// True iff four pebbles could be gathered on a and b, i.e. the pair is not
  /// rigidly connected by the accepted edges. Pebbles may move.
  bool can_gather(Vertex a, Vertex b);

  const std::vector<Vertex>& failed_closure() const { return closure_; }
  std::size_t accepted() const { return accepted_; }

 private:
  bool gather(Vertex a, Vertex b);
  bool fetch_pebble(Vertex to, Vertex blocked, std::vector<char>& visited);

  std::vector<int> pebbles_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<Vertex> closure_;
  std::vector<Vertex> parent_;
  std::size_t accepted_ = 0;
};

/// Laman test. Edges are played in sorted order; throws Error(TooSmall) for
/// fewer than two vertices.
RigidityVerdict check_rigidity(const Graph& g);
/// Same test, playing the edges in the given order (a permutation of g's edges).
RigidityVerdict check_rigidity(const Graph& g, std::span<const Edge> order);

/// True iff some minimally rigid subgraph of g contains both a and b, i.e. a
/// and b share a rigid component.
bool exists_rigid_subgraph_containing(const Graph& g, Vertex a, Vertex b);

}  // namespace cayley
