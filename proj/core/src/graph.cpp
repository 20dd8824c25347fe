#include "cayley/graph.hpp"

#include <algorithm>
#include <queue>

#include "cayley/error.hpp"

namespace cayley {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::HostTooLarge: return "HostTooLarge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotABaseNonEdge: return "NotABaseNonEdge";
    case ErrorCode::StuckConstruction: return "StuckConstruction";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ExtremeEdgeExists: return "ExtremeEdgeExists";
    case ErrorCode::NotOneDofTreeDecomposable: return "NotOneDofTreeDecomposable";
    case ErrorCode::TooFewSteps: return "TooFewSteps";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
  }
  return "Unknown";
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.w) + ")";
}

Graph::Graph(int vertex_count) : adjacency_(vertex_count < 0 ? 0 : vertex_count) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::InvalidGraph, "negative vertex count");
  }
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.w) {
      throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(e.u));
    }
    if (e.u < 0 || e.w >= vertex_count) {
      throw Error(ErrorCode::InvalidGraph, "edge " + to_string(e) + " out of range");
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorCode::InvalidGraph, "duplicate edge " + to_string(*dup));
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.w);
    adjacency_[e.w].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  const auto& na = adjacency_[a];
  const auto& nb = adjacency_[b];
  return na.size() <= nb.size() ? std::binary_search(na.begin(), na.end(), b)
                                : std::binary_search(nb.begin(), nb.end(), a);
}

std::ptrdiff_t Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return it - edges_.begin();
}

bool Graph::is_connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex x : adjacency_[v]) {
      if (!seen[x]) {
        seen[x] = 1;
        ++reached;
        stack.push_back(x);
      }
    }
  }
  return reached == n;
}

Graph Graph::with_edge(const Edge& e) const {
  return with_edges(std::span<const Edge>(&e, 1));
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(vertex_count(), all);
}

Graph Graph::without_edge(const Edge& e) const {
  std::vector<Edge> all;
  all.reserve(edges_.size());
  for (const Edge& x : edges_) {
    if (x != e) all.push_back(x);
  }
  if (all.size() == edges_.size()) {
    throw Error(ErrorCode::NoSuchEdge, "no edge " + to_string(e));
  }
  return Graph(vertex_count(), all);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> remap(vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (remap[e.u] >= 0 && remap[e.w] >= 0) kept.emplace_back(remap[e.u], remap[e.w]);
  }
  return Graph(static_cast<int>(keep.size()), kept);
}

Graph Graph::without_vertices(std::span<const Vertex> drop,
                              std::vector<Vertex>* old_ids) const {
  std::vector<char> dropped(vertex_count(), 0);
  for (Vertex v : drop) dropped[v] = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (!dropped[v]) keep.push_back(v);
  }
  if (old_ids) *old_ids = keep;
  return induced(keep);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = 0; y < b; ++y) edges.emplace_back(x, a + y);
  return Graph(a + b, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.w);
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (*ia == *ib) return false;
      if (*ia < *ib) ++ia; else ++ib;
    }
  }
  return true;
}

Graph contract_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    throw Error(ErrorCode::NoSuchEdge, "cannot contract missing edge " + to_string(e));
  }
  const Vertex keep = e.u;
  const Vertex gone = e.w;
  auto relabel = [&](Vertex v) {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<Edge> merged;
  merged.reserve(g.edge_count());
  for (const Edge& x : g.edges()) {
    Vertex a = relabel(x.u);
    Vertex b = relabel(x.w);
    if (a != b) merged.emplace_back(a, b);
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return Graph(g.vertex_count() - 1, merged);
}

}  // namespace cayley
