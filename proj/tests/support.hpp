#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "cayley/cayley.hpp"
#include "cayley/error.hpp"
#include "cayley/generators.hpp"
#include "cayley/graph.hpp"
#include "cayley/minor.hpp"

namespace cayley::testing {

// Vertex names of the ten-vertex level example: v0, v0', v1..v8.
inline constexpr Vertex kV0 = 0;
inline constexpr Vertex kV0p = 1;
inline constexpr Vertex v(int i) { return static_cast<Vertex>(i + 1); }

// Edge-cluster graph with v1..v4 on (v0, v0'), v5 on (v1, v2), v6 on
// (v3, v4), v7 on (v5, v6) and v8 on (v3, v7).
inline Graph level_example() {
  return Graph(10, {{kV0, v(1)}, {kV0p, v(1)}, {kV0, v(2)}, {kV0p, v(2)}, {kV0, v(3)}, {kV0p, v(3)},
                    {kV0, v(4)}, {kV0p, v(4)}, {v(5), v(1)}, {v(5), v(2)}, {v(6), v(3)}, {v(6), v(4)},
                    {v(7), v(5)}, {v(7), v(6)}, {v(8), v(3)}, {v(8), v(7)}});
}

// Two triangles (a,u1,w1), (b,u1,w2) and u2 on (w1, w2); base (a, b).
struct RebaseExample {
  static constexpr Vertex a = 0, b = 1, u1 = 2, w1 = 3, w2 = 4, u2 = 5;
};
inline Graph rebase_example() {
  using R = RebaseExample;
  return Graph(6, {{R::a, R::u1}, {R::a, R::w1}, {R::u1, R::w1}, {R::b, R::u1}, {R::b, R::w2}, {R::u1, R::w2},
                   {R::u2, R::w1}, {R::u2, R::w2}});
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, edges);
}

// Seeded 1-dof tree-decomposable graphs with at most 30 vertices, cycling
// through the generator flags.
inline std::vector<GeneratedGraph> random_corpus(int count, std::uint64_t seed, int max_steps = 14) {
  std::mt19937_64 rng(seed);
  std::vector<GeneratedGraph> out;
  for (int i = 0; i < count; ++i) {
    RandomOptions opts;
    opts.seed = rng();
    opts.steps = 1 + static_cast<int>(rng() % max_steps);
    opts.triangle_free = i % 2 == 0;
    opts.one_path_bias = (i / 2) % 2 == 0;
    out.push_back(gen_random(opts));
  }
  return out;
}

inline std::vector<GeneratedGraph> family_corpus() {
  std::vector<GeneratedGraph> out;
  for (int n = 3; n <= 12; ++n) out.push_back(gen_fan(n));
  out.push_back(gen_six_cluster_base());
  out.push_back(gen_lemma57_1a());
  for (int m = 3; m <= 7; ++m) out.push_back(gen_clique_minor_1path(m));
  for (int m = 3; m <= 6; ++m) out.push_back(gen_clique_minor_trifree(m));
  return out;
}

// Laman counts by enumerating every vertex subset.
struct LamanCount {
  bool independent = true;
  bool minimally_rigid = false;
};
inline LamanCount laman_by_subsets(const Graph& g) {
  const int n = g.vertex_count();
  LamanCount out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < 2) continue;
    int inside = 0;
    for (const Edge& e : g.edges()) inside += ((mask >> e.u) & 1u) && ((mask >> e.w) & 1u);
    if (inside > 2 * size - 3) out.independent = false;
  }
  out.minimally_rigid = out.independent && static_cast<long>(g.edge_count()) == 2L * n - 3;
  return out;
}

// For an independent g: true iff a and b both lie in a vertex subset whose
// induced subgraph has 2|S| - 3 edges. Only for tiny graphs.
inline bool rigid_pair_by_subsets(const Graph& g, Vertex a, Vertex b) {
  const int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!((mask >> a) & 1u) || !((mask >> b) & 1u)) continue;
    std::vector<Vertex> keep;
    for (Vertex x = 0; x < n; ++x) {
      if ((mask >> x) & 1u) keep.push_back(x);
    }
    const Graph sub = g.induced(keep);
    if (static_cast<long>(sub.edge_count()) == 2L * sub.vertex_count() - 3) {
      return true;
    }
  }
  return false;
}

// Structural check of a merge history, written without the merge engine.
inline bool tree_is_well_formed(const Graph& g, const DecompositionTree& t) {
  if (t.root < 0 || t.root >= static_cast<int>(t.nodes.size())) return false;
  std::vector<Edge> leaves;
  std::vector<int> visits(t.nodes.size(), 0);
  std::function<bool(int)> walk = [&](int id) {
    if (id < 0 || id >= static_cast<int>(t.nodes.size()) || visits[id]++) return false;
    const auto& node = t.nodes[id];
    if (!std::is_sorted(node.vertices.begin(), node.vertices.end())) return false;
    if (node.is_leaf()) {
      if (node.vertices.size() != 2 || !g.has_edge(node.edge())) return false;
      leaves.push_back(node.edge());
      return true;
    }
    std::vector<Vertex> merged;
    for (int c : node.children) {
      if (!walk(c)) return false;
      const auto& vs = t.nodes[c].vertices;
      merged.insert(merged.end(), vs.begin(), vs.end());
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    if (merged != node.vertices) return false;
    auto meet = [&](int x, int y) {
      std::vector<Vertex> common;
      const auto& a = t.nodes[node.children[x]].vertices;
      const auto& b = t.nodes[node.children[y]].vertices;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      return common;
    };
    const auto ab = meet(0, 1);
    const auto bc = meet(1, 2);
    const auto ca = meet(2, 0);
    if (ab != std::vector<Vertex>{node.shared[0]} || bc != std::vector<Vertex>{node.shared[1]} ||
        ca != std::vector<Vertex>{node.shared[2]}) {
      return false;
    }
    return node.shared[0] != node.shared[1] && node.shared[1] != node.shared[2] && node.shared[0] != node.shared[2];
  };
  if (!walk(t.root)) return false;
  std::sort(leaves.begin(), leaves.end());
  return leaves == g.edges();
}

// Finds connecting edges for the given branch sets, if every target edge has one.
inline std::optional<MinorWitness> witness_from_sets(const Graph& host, const Graph& target,
                                                     std::vector<std::vector<Vertex>> sets) {
  std::vector<int> owner(host.vertex_count(), -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Vertex x : sets[i]) owner[x] = static_cast<int>(i);
  }
  MinorWitness w;
  w.branch_sets = std::move(sets);
  for (const Edge& te : target.edges()) {
    std::optional<Edge> link;
    for (const Edge& he : host.edges()) {
      if ((owner[he.u] == te.u && owner[he.w] == te.w) || (owner[he.u] == te.w && owner[he.w] == te.u)) {
        link = he;
        break;
      }
    }
    if (!link) return std::nullopt;
    w.connecting_edges.push_back(*link);
  }
  return w;
}

// Vertices of g outside the clusters that contain `v` and nowhere else.
inline std::vector<Vertex> exclusive_vertices(const ClusterSet& cs, Vertex v) {
  std::vector<Vertex> out;
  for (ClusterId c : cs.clusters_of(v)) {
    for (Vertex x : cs[c].vertices) {
      if (x == v || cs.cdeg(x) == 1) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline int l1_count(const ConstructionSequence& seq) {
  return static_cast<int>(seq.level_vertices(1).size());
}

inline bool in_last_level(const ConstructionSequence& seq, Vertex x) {
  const auto ll = last_level(seq.clusters);
  return std::find(ll.begin(), ll.end(), x) != ll.end();
}

}  // namespace cayley::testing
