#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/graph.hpp"

namespace cayley {

using ClusterId = std::int32_t;

/// Node of a triangle decomposition. A leaf is a single edge; an internal
/// node merges three components that pairwise share exactly one vertex:
/// children[0] and children[1] meet at shared[0], children[1] and children[2]
/// at shared[1], children[2] and children[0] at shared[2].
struct DecompositionNode {
  std::vector<Vertex> vertices;
  std::array<int, 3> children{-1, -1, -1};
  std::array<Vertex, 3> shared{-1, -1, -1};

  bool is_leaf() const { return children[0] < 0; }
  Edge edge() const { return Edge(vertices[0], vertices[1]); }
};

struct DecompositionTree {
  std::vector<DecompositionNode> nodes;
  int root = -1;

  const DecompositionNode& root_node() const { return nodes[root]; }
  /// Indented pre-order dump, one node per line:
  ///   `[v v v ...] shared a b c` for merges, `[u w]` for leaves.
  std::string dump() const;
};

/// A maximal tree-decomposable subgraph.
struct Cluster {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted
};

/// Edge-disjoint cover of a graph by clusters, with the vertex -> clusters
/// incidence index. Clusters are ordered by their sorted vertex lists.
class ClusterSet {
 public:
  ClusterSet() = default;
  ClusterSet(int vertex_count, std::vector<Cluster> clusters);

  std::size_t size() const { return clusters_.size(); }
  const Cluster& operator[](ClusterId c) const { return clusters_[c]; }
  const std::vector<Cluster>& clusters() const { return clusters_; }
  int vertex_count() const { return static_cast<int>(incidence_.size()); }

  /// Sorted ids of the clusters containing v.
  std::span<const ClusterId> clusters_of(Vertex v) const { return incidence_[v]; }
  int cdeg(Vertex v) const { return static_cast<int>(incidence_[v].size()); }
  bool contains(ClusterId c, Vertex v) const;
  /// Cluster owning e, or -1.
  ClusterId owner(const Edge& e) const;
  /// Some common vertex of the two clusters, if any.
  std::optional<Vertex> shared_vertex(ClusterId a, ClusterId b) const;
  /// Number of common vertices, stopping once it reaches `cap`.
  int shared_count(ClusterId a, ClusterId b, int cap = 2) const;

 private:
  std::vector<Cluster> clusters_;
  std::vector<std::vector<ClusterId>> incidence_;
  std::unordered_map<Edge, ClusterId> owner_;
};

/// Number of clusters containing v.
inline int cdeg(const ClusterSet& clusters, Vertex v) { return clusters.cdeg(v); }

/// Merge-order control for the cluster merging engine. The default is the
/// deterministic order; a seed randomises which cluster is examined next and
/// where each scan starts.
struct MergeOptions {
  std::optional<std::uint64_t> shuffle_seed;
};

/// Bottom-up cluster merging: start with one cluster per edge and merge any
/// three clusters that pairwise share three distinct single vertices, until
/// nothing merges. Returns the merge history if a single cluster remains.
/// Throws Error(EmptyGraph) without edges, Error(Disconnected) if disconnected.
std::optional<DecompositionTree> is_tree_decomposable(const Graph& g,
                                                      const MergeOptions& options = {});

/// The clusters left when merging reaches its fixpoint. Throws
/// Error(Disconnected) if g is disconnected.
ClusterSet maximal_clusters(const Graph& g, const MergeOptions& options = {});

}  // namespace cayley
