#include "cayley/construction.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <tuple>

#include "cayley/error.hpp"

namespace cayley {
namespace {

bool has_one_dof_edge_count(const Graph& g) {
  return 2 * static_cast<long>(g.vertex_count()) - 4 == static_cast<long>(g.edge_count());
}

[[noreturn]] void fail_derivation(const Graph& g, const Edge& f, const std::string& why) {
  bool tree_decomposable = false;
  try {
    tree_decomposable = is_tree_decomposable(g.with_edge(f)).has_value();
  } catch (const Error&) {
    tree_decomposable = false;
  }
  if (!tree_decomposable) {
    throw Error(ErrorCode::NotABaseNonEdge, to_string(f) + " is not a base non-edge");
  }
  throw Error(ErrorCode::StuckConstruction, "construction from " + to_string(f) + " stuck: " + why);
}

class Deriver {
 public:
  Deriver(const Graph& g, const Edge& f, const ClusterSet& clusters)
      : g_(g),
        f_(f),
        clusters_(clusters),
        constructed_(g.vertex_count(), 0),
        levels_(g.vertex_count(), -1),
        hits_(clusters.size(), 0),
        anchor_(clusters.size(), -1),
        used_(clusters.size(), 0) {}

  ConstructionSequence run() {
    construct(f_.u, 0);
    construct(f_.w, 0);
    while (!queue_.empty()) {
      auto [level, v] = queue_.top();
      queue_.pop();
      if (constructed_[v]) continue;
      auto best = best_attachment(v);
      if (!best) continue;
      if (best->level != level) {
        queue_.emplace(best->level, v);
        continue;
      }
      steps_.push_back(*best);
      used_[best->cluster_a] = used_[best->cluster_b] = 1;
      construct(v, best->level);
      for (ClusterId c : {best->cluster_a, best->cluster_b}) {
        for (Vertex x : clusters_[c].vertices) {
          if (!constructed_[x]) construct(x, best->level);
        }
      }
    }

    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (!constructed_[v]) fail_derivation(g_, f_, "vertex " + std::to_string(v) + " never attached");
    }
    for (ClusterId c = 0; c < static_cast<ClusterId>(clusters_.size()); ++c) {
      if (!used_[c]) fail_derivation(g_, f_, "cluster " + std::to_string(c) + " never attached");
    }

    ConstructionSequence seq;
    seq.graph = g_;
    seq.clusters = clusters_;
    seq.base = f_;
    seq.steps = std::move(steps_);
    seq.levels = std::move(levels_);
    return seq;
  }

 private:
  void construct(Vertex x, int level) {
    constructed_[x] = 1;
    levels_[x] = level;
    for (ClusterId c : clusters_.clusters_of(x)) {
      if (++hits_[c] != 1) continue;
      anchor_[c] = x;
      for (Vertex y : clusters_[c].vertices) {
        if (constructed_[y] || clusters_.cdeg(y) < 2) continue;
        if (auto best = best_attachment(y)) queue_.emplace(best->level, y);
      }
    }
  }

  // Cheapest pair of anchored clusters at v with distinct anchors.
  std::optional<ConstructionStep> best_attachment(Vertex v) const {
    std::optional<ConstructionStep> best;
    auto around = clusters_.clusters_of(v);
    for (std::size_t i = 0; i < around.size(); ++i) {
      const ClusterId a = around[i];
      if (hits_[a] != 1 || used_[a]) continue;
      for (std::size_t j = i + 1; j < around.size(); ++j) {
        const ClusterId b = around[j];
        if (hits_[b] != 1 || used_[b] || anchor_[a] == anchor_[b]) continue;
        const int level = 1 + std::max(levels_[anchor_[a]], levels_[anchor_[b]]);
        if (!best || level < best->level) {
          best = ConstructionStep{v, anchor_[a], anchor_[b], a, b, level};
        }
      }
    }
    return best;
  }

  const Graph& g_;
  Edge f_;
  const ClusterSet& clusters_;
  std::vector<char> constructed_;
  std::vector<int> levels_;
  std::vector<int> hits_;
  std::vector<Vertex> anchor_;
  std::vector<char> used_;
  std::vector<ConstructionStep> steps_;
  using Entry = std::pair<int, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue_;
};

void require_one_dof_tree_decomposable(const Graph& g) {
  if (!first_base_non_edge(g)) {
    throw Error(ErrorCode::NotOneDofTreeDecomposable,
                "graph has no base non-edge, so it is not 1-dof tree-decomposable");
  }
}

}  // namespace

int ConstructionSequence::max_level() const {
  int best = 0;
  for (const auto& s : steps) best = std::max(best, s.level);
  return best;
}

std::vector<Vertex> ConstructionSequence::level_vertices(int level) const {
  if (level == 0) return {base.u, base.w};
  std::vector<Vertex> out;
  for (const auto& s : steps) {
    if (s.level == level) out.push_back(s.new_vertex);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_sequence(const ConstructionSequence& seq) {
  std::ostringstream out;
  out << "base " << seq.base.u << ' ' << seq.base.w << '\n';
  for (const auto& s : seq.steps) {
    out << "step " << s.new_vertex << ' ' << s.u << ' ' << s.w << ' ' << s.level << '\n';
  }
  return out.str();
}

bool is_base_non_edge(const Graph& g, const Edge& f) {
  if (f.u == f.w || !g.has_vertex(f.u) || !g.has_vertex(f.w) || g.has_edge(f)) return false;
  if (!has_one_dof_edge_count(g)) return false;
  const Graph closed = g.with_edge(f);
  if (!closed.is_connected()) return false;
  return is_tree_decomposable(closed).has_value();
}

namespace {

// Candidate pairs: non-adjacent, not inside one cluster (that would make
// g ∪ f dependent), in lexicographic order.
template <typename Visit>
void scan_base_candidates(const Graph& g, Visit&& visit) {
  if (!has_one_dof_edge_count(g) || g.vertex_count() < 2) return;
  std::optional<ClusterSet> clusters;
  if (g.is_connected() && g.edge_count() > 0) clusters = maximal_clusters(g);
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      if (g.has_edge(a, b)) continue;
      if (clusters) {
        bool same = false;
        for (ClusterId c : clusters->clusters_of(a)) same = same || clusters->contains(c, b);
        if (same) continue;
      }
      const Graph closed = g.with_edge(Edge(a, b));
      if (!closed.is_connected()) continue;
      if (is_tree_decomposable(closed) && !visit(Edge(a, b))) return;
    }
  }
}

}  // namespace

std::vector<Edge> find_base_non_edges(const Graph& g) {
  std::vector<Edge> out;
  scan_base_candidates(g, [&](const Edge& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::optional<Edge> first_base_non_edge(const Graph& g) {
  std::optional<Edge> out;
  scan_base_candidates(g, [&](const Edge& e) {
    out = e;
    return false;
  });
  return out;
}

ConstructionSequence derive_construction(const Graph& g, const Edge& f) {
  if (f.u == f.w || !g.has_vertex(f.u) || !g.has_vertex(f.w) || g.has_edge(f) ||
      !has_one_dof_edge_count(g)) {
    throw Error(ErrorCode::NotABaseNonEdge, to_string(f) + " is not a base non-edge");
  }
  if (g.edge_count() == 0) return derive_construction(g, f, ClusterSet(g.vertex_count(), {}));
  if (!g.is_connected()) {
    throw Error(ErrorCode::NotABaseNonEdge, "graph is disconnected, " + to_string(f) +
                                                " cannot be a base non-edge");
  }
  return derive_construction(g, f, maximal_clusters(g));
}

ConstructionSequence derive_construction(const Graph& g, const Edge& f, const ClusterSet& clusters) {
  if (f.u == f.w || !g.has_vertex(f.u) || !g.has_vertex(f.w) || g.has_edge(f)) {
    throw Error(ErrorCode::NotABaseNonEdge, to_string(f) + " is not a base non-edge");
  }
  for (ClusterId c : clusters.clusters_of(f.u)) {
    if (clusters.contains(c, f.w)) {
      throw Error(ErrorCode::NotABaseNonEdge, to_string(f) + " lies inside one cluster");
    }
  }
  return Deriver(g, f, clusters).run();
}

ExtremeGraph extreme_graph(const ConstructionSequence& seq, int k) {
  if (k < 1 || k > static_cast<int>(seq.steps.size())) {
    throw Error(ErrorCode::IndexOutOfRange, "step " + std::to_string(k) + " out of range 1.." +
                                                std::to_string(seq.steps.size()));
  }
  const ConstructionStep& step = seq.steps[k - 1];
  const Edge extreme(step.u, step.w);
  if (seq.graph.has_edge(extreme)) {
    throw Error(ErrorCode::ExtremeEdgeExists, "extreme edge " + to_string(extreme) + " is already an edge");
  }

  std::vector<char> member(seq.graph.vertex_count(), 0);
  member[seq.base.u] = member[seq.base.w] = 1;
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) {
    for (ClusterId c : {seq.steps[i].cluster_a, seq.steps[i].cluster_b}) {
      const Cluster& cl = seq.clusters[c];
      for (Vertex v : cl.vertices) member[v] = 1;
      edges.insert(edges.end(), cl.edges.begin(), cl.edges.end());
    }
  }

  ExtremeGraph out;
  out.step = k;
  out.extreme_edge = extreme;
  std::vector<Vertex> local(seq.graph.vertex_count(), -1);
  for (Vertex v = 0; v < seq.graph.vertex_count(); ++v) {
    if (member[v]) {
      local[v] = static_cast<Vertex>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<Edge> relabelled;
  relabelled.reserve(edges.size() + 1);
  for (const Edge& e : edges) relabelled.emplace_back(local[e.u], local[e.w]);
  relabelled.emplace_back(local[extreme.u], local[extreme.w]);
  out.graph = Graph(static_cast<int>(out.original.size()), relabelled);
  return out;
}

std::vector<Vertex> last_level(const ClusterSet& clusters) {
  auto other_shared = [&](ClusterId c, Vertex v) {
    int count = 0;
    for (Vertex x : clusters[c].vertices) {
      if (x != v && clusters.cdeg(x) >= 2) ++count;
    }
    return count;
  };
  std::vector<Vertex> out;
  for (Vertex v = 0; v < clusters.vertex_count(); ++v) {
    if (clusters.cdeg(v) != 2) continue;
    auto pair = clusters.clusters_of(v);
    if (other_shared(pair[0], v) <= 1 && other_shared(pair[1], v) <= 1) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> last_level(const Graph& g) {
  require_one_dof_tree_decomposable(g);
  return last_level(maximal_clusters(g));
}

bool is_one_path(const ConstructionSequence& seq) {
  int count = 0;
  for (Vertex v : last_level(seq.clusters)) {
    if (!seq.base.contains(v)) ++count;
  }
  return count == 1;
}

std::optional<Edge> has_one_path_property(const Graph& g) {
  const auto bases = find_base_non_edges(g);
  if (bases.empty()) {
    throw Error(ErrorCode::NotOneDofTreeDecomposable,
                "graph has no base non-edge, so it is not 1-dof tree-decomposable");
  }
  const ClusterSet clusters = maximal_clusters(g);
  for (const Edge& f : bases) {
    if (is_one_path(derive_construction(g, f, clusters))) return f;
  }
  return std::nullopt;
}

Edge normalize_base_non_edge(const Graph& g, const Edge& f) {
  const ConstructionSequence seq = derive_construction(g, f);
  if (seq.steps.size() < 2) {
    throw Error(ErrorCode::TooFewSteps, "need at least two construction steps");
  }
  if (seq.clusters.cdeg(f.u) >= 2 && seq.clusters.cdeg(f.w) >= 2) return f;
  return Edge(seq.steps[1].u, seq.steps[1].w);
}

}  // namespace cayley
