#pragma once

#include <optional>
#include <vector>

#include "cayley/graph.hpp"

namespace cayley {

/// A model of `target` inside a host graph: one connected, pairwise disjoint
/// branch set per target vertex, and one host edge per target edge (aligned
/// with target.edges()) joining the corresponding branch sets.
struct MinorWitness {
  std::vector<std::vector<Vertex>> branch_sets;
  std::vector<Edge> connecting_edges;
};

inline constexpr int kDefaultMinorHostLimit = 14;

/// Exhaustive minor test. Before searching, the host is reduced in ways that
/// cannot create or destroy a `target` model (pendant vertices are dropped
/// when the target has minimum degree >= 2, degree-2 vertices are suppressed
/// when it has minimum degree >= 3). `max_host_vertices` bounds the reduced
/// host; exceeding it throws Error(HostTooLarge).
std::optional<MinorWitness> has_minor(const Graph& host, const Graph& target,
                                      int max_host_vertices = kDefaultMinorHostLimit);

/// Checks every MinorWitness invariant against the two graphs.
bool is_valid_minor_witness(const Graph& host, const Graph& target,
                            const MinorWitness& witness);

}  // namespace cayley
