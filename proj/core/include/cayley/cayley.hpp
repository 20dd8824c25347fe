#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayley/construction.hpp"
#include "cayley/graph.hpp"
#include "cayley/treedecomp.hpp"

namespace cayley {

/// T1∩T2 = {p1}, T2∩T3 = {p3}, T3∩T4 = {p2}, T4∩T1 = {p4}; the p's are distinct.
struct FourCycle {
  int step = 0;
  std::array<ClusterId, 4> clusters{};
  std::array<Vertex, 4> shared{};  // p1, p2, p3, p4

  friend bool operator==(const FourCycle&, const FourCycle&) = default;
};

struct CayleyVerdict {
  bool low_complexity = true;
  /// 1-based step index: the first non-tree-decomposable extreme graph
  /// (brute force) or the first step without a usable cluster pair (fast).
  std::optional<int> witness_step;
  std::vector<FourCycle> four_cycles;
};

/// `verdict`, optional `witness_step`, then one `fourcycle` line per cycle.
std::string format_verdict(const CayleyVerdict& verdict);

struct BruteOptions {
  unsigned threads = 1;
};

/// Checks every extreme graph for tree-decomposability.
CayleyVerdict low_cayley_brute(const ConstructionSequence& seq, const BruteOptions& opts = {});
CayleyVerdict low_cayley_brute(const Graph& g, const Edge& f, const BruteOptions& opts = {});

struct FastOptions {
  /// Attach a four-cycle certificate to every step at level 2 or higher.
  bool collect_four_cycles = false;
};

/// Cluster-pair list recognizer; expected linear in the number of steps.
CayleyVerdict low_cayley_fast(const ConstructionSequence& seq, const FastOptions& opts = {});
CayleyVerdict low_cayley_fast(const Graph& g, const Edge& f, const FastOptions& opts = {});

enum class Recognizer { Fast, Brute };

/// Verdict on the lexicographically smallest base non-edge.
/// Throws Error(NotOneDofTreeDecomposable) if there is none.
CayleyVerdict low_cayley_graph(const Graph& g, Recognizer how = Recognizer::Fast);

struct InvarianceReport {
  std::vector<Edge> base_non_edges;
  std::vector<bool> verdicts;  // aligned with base_non_edges
  bool passed = true;
};

/// Brute-force verdict on every base non-edge; passes iff they all agree.
InvarianceReport verify_base_invariance(const Graph& g);

/// Four-cycle whose first two clusters hold u and w, among the clusters whose
/// vertices are all in `constructed`.
std::optional<FourCycle> find_four_cycle(const ClusterSet& clusters, std::span<const Vertex> constructed,
                                         Vertex u, Vertex w);

/// Four-cycle certificate for step k (1-based) of a sequence.
std::optional<FourCycle> find_four_cycle(const ConstructionSequence& seq, int k);

bool is_valid_four_cycle(const ClusterSet& clusters, const FourCycle& cycle);

}  // namespace cayley
