#include "cayley/rigidity.hpp"

#include <algorithm>

#include "cayley/error.hpp"

namespace cayley {

PebbleGame::PebbleGame(int vertex_count)
    : pebbles_(vertex_count, 2), out_(vertex_count), parent_(vertex_count, -1) {}

// DFS along pebble directions from `to`, looking for a free pebble; on
// success the path is reversed so the pebble ends up on `to`.
bool PebbleGame::fetch_pebble(Vertex to, Vertex blocked, std::vector<char>& visited) {
  std::vector<Vertex> stack{to};
  visited[to] = 1;
  visited[blocked] = 1;
  parent_[to] = -1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex x : out_[v]) {
      if (visited[x]) continue;
      visited[x] = 1;
      parent_[x] = v;
      if (pebbles_[x] > 0) {
        --pebbles_[x];
        ++pebbles_[to];
        for (Vertex cur = x; cur != to; cur = parent_[cur]) {
          Vertex from = parent_[cur];
          auto& edges = out_[from];
          edges.erase(std::find(edges.begin(), edges.end(), cur));
          out_[cur].push_back(from);
        }
        return true;
      }
      stack.push_back(x);
    }
  }
  return false;
}

bool PebbleGame::gather(Vertex a, Vertex b) {
  const int n = static_cast<int>(pebbles_.size());
  std::vector<char> seen(n);
  while (pebbles_[a] + pebbles_[b] < 4) {
    const Vertex need = pebbles_[a] < 2 ? a : b;
    const Vertex keep = need == a ? b : a;
    std::fill(seen.begin(), seen.end(), 0);
    if (fetch_pebble(need, keep, seen)) continue;
    // The exhausted search is closed under pebble directions and holds at
    // most three free pebbles: it spans at least 2|V|-3 accepted edges.
    closure_.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (seen[v]) closure_.push_back(v);
    }
    return false;
  }
  return true;
}

bool PebbleGame::insert(const Edge& e) {
  if (!gather(e.u, e.w)) return false;
  --pebbles_[e.u];
  out_[e.u].push_back(e.w);
  ++accepted_;
  return true;
}

bool PebbleGame::can_gather(Vertex a, Vertex b) { return gather(a, b); }

RigidityVerdict check_rigidity(const Graph& g) { return check_rigidity(g, g.edges()); }

RigidityVerdict check_rigidity(const Graph& g, std::span<const Edge> order) {
  if (g.vertex_count() < 2) {
    throw Error(ErrorCode::TooSmall, "rigidity needs at least two vertices");
  }
  PebbleGame game(g.vertex_count());
  RigidityVerdict verdict;
  verdict.independent = true;
  for (const Edge& e : order) {
    if (!game.insert(e) && verdict.independent) {
      verdict.independent = false;
      verdict.violating_subgraph = game.failed_closure();
    }
  }
  verdict.minimally_rigid =
      verdict.independent &&
      g.edge_count() == 2 * static_cast<std::size_t>(g.vertex_count()) - 3;
  return verdict;
}

bool exists_rigid_subgraph_containing(const Graph& g, Vertex a, Vertex b) {
  if (a == b || !g.has_vertex(a) || !g.has_vertex(b)) {
    throw Error(ErrorCode::InvalidGraph, "need two distinct vertices of the graph");
  }
  if (g.has_edge(a, b)) return true;
  PebbleGame game(g.vertex_count());
  for (const Edge& e : g.edges()) game.insert(e);
  return !game.can_gather(a, b);
}

}  // namespace cayley
