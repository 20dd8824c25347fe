#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/treedecomp.hpp"

namespace cayley {

/// new_vertex ◁ (u ∈ cluster_a, w ∈ cluster_b).
struct ConstructionStep {
  Vertex new_vertex = -1;
  Vertex u = -1;
  Vertex w = -1;
  ClusterId cluster_a = -1;
  ClusterId cluster_b = -1;
  int level = 0;

  friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

/// How a 1-dof tree-decomposable graph is built from a base non-edge. Each
/// step hooks two fresh clusters onto the constructed part, one at u and one
/// at w; all their vertices become constructed at that step's level.
struct ConstructionSequence {
  Graph graph;
  ClusterSet clusters;
  Edge base;
  std::vector<ConstructionStep> steps;
  /// Level of every vertex: 0 for the base endpoints, otherwise the level of
  /// the step that brought the vertex in.
  std::vector<int> levels;

  int max_level() const;
  /// New vertices of the steps at `level` (the base endpoints for level 0).
  std::vector<Vertex> level_vertices(int level) const;
};

/// `base v0 v0'` followed by one `step <v> <u> <w> <level>` line per step.
std::string format_sequence(const ConstructionSequence& seq);

/// All non-adjacent pairs f with g ∪ f tree-decomposable, sorted.
std::vector<Edge> find_base_non_edges(const Graph& g);
/// Lexicographically smallest base non-edge, if any.
std::optional<Edge> first_base_non_edge(const Graph& g);
bool is_base_non_edge(const Graph& g, const Edge& f);

/// Greedy derivation: repeatedly take the unconstructed shared vertex with the
/// smallest (level, id) that has two clusters each meeting the constructed
/// part in a single, distinct vertex. Throws Error(NotABaseNonEdge) if
/// g ∪ f is not tree-decomposable and Error(StuckConstruction) if it is but
/// the derivation cannot finish.
ConstructionSequence derive_construction(const Graph& g, const Edge& f);
ConstructionSequence derive_construction(const Graph& g, const Edge& f, const ClusterSet& clusters);

/// G_f(k-1) plus the edge (u_k, w_k), relabelled densely in original-id
/// order; original[i] is the graph vertex behind extreme vertex i.
struct ExtremeGraph {
  int step = 0;
  Graph graph;
  std::vector<Vertex> original;
  Edge extreme_edge;  // in original ids
};

/// k is 1-based. Throws Error(IndexOutOfRange) or Error(ExtremeEdgeExists).
ExtremeGraph extreme_graph(const ConstructionSequence& seq, int k);

/// Vertices shared by exactly two clusters, each of which meets the rest of
/// the graph in at most one further shared vertex.
std::vector<Vertex> last_level(const ClusterSet& clusters);
/// Same, after checking g is 1-dof tree-decomposable
/// (Error(NotOneDofTreeDecomposable) otherwise).
std::vector<Vertex> last_level(const Graph& g);

/// Exactly one last-level vertex besides the base endpoints.
bool is_one_path(const ConstructionSequence& seq);

/// A base non-edge with a 1-path construction, if there is one.
std::optional<Edge> has_one_path_property(const Graph& g);

/// f itself if both endpoints are shared vertices, otherwise the base pair of
/// the second step. Throws Error(TooFewSteps) below two steps.
Edge normalize_base_non_edge(const Graph& g, const Edge& f);

}  // namespace cayley
