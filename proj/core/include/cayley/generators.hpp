#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/graph.hpp"

namespace cayley {

struct GeneratedGraph {
  Graph graph;
  Edge base;
};

/// Strip v1..vn (ids 0..n-1) with path edges and chords (v_i, v_{i+3}).
/// Every (v_i, v_{i+2}) is a base non-edge; the designated one is (0, 2).
GeneratedGraph gen_fan(int n);

/// Five vertices, six edge clusters: w1=0, w2=1, p1=2, p2=3, v=4; base (w1, w2).
GeneratedGraph gen_six_cluster_base();

/// v0=0, v0'=1; v1..v3 = 2..4 on both; v4=5 on v1,v2; v5=6 on v4,v3.
GeneratedGraph gen_lemma57_1a();

/// Rigid block holding a K_m minor, used in place of one edge of gen_fan(5).
/// 3 <= m <= 7.
GeneratedGraph gen_clique_minor_1path(int m);

/// v1=0, v2=1, u_i on both, w_ij on u_i and u_j. 3 <= m <= 6.
GeneratedGraph gen_clique_minor_trifree(int m);

/// The tree-decomposable block of gen_clique_minor_1path on its own; its
/// first two vertices are where it is glued in.
Graph clique_minor_block(int m);

struct RandomOptions {
  std::uint64_t seed = 1;
  int steps = 1;
  bool triangle_free = false;
  bool one_path_bias = false;
};

/// Grows a graph from the base non-edge (0, 1), one vertex of degree two per
/// step (or, without triangle_free, sometimes a triangle hung on one vertex
/// plus an edge). Deterministic for a given seed.
GeneratedGraph gen_random(const RandomOptions& opts);

/// Family names accepted by generate_family.
std::vector<std::string> family_names();

/// `params` are the family's size (or, for "random", seed and step count plus
/// optional 0/1 triangle-free and one-path-bias flags). Throws
/// Error(UnknownFamily) or Error(BadSize).
GeneratedGraph generate_family(std::string_view family, const std::vector<long long>& params);

}  // namespace cayley
