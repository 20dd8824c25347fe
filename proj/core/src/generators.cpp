#include "cayley/generators.hpp"

#include <algorithm>
#include <random>

#include "cayley/error.hpp"

namespace cayley {
namespace {

void require_size(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadSize, what);
}

}  // namespace

GeneratedGraph gen_fan(int n) {
  require_size(n >= 3, "fan needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  for (Vertex i = 0; i + 3 < n; ++i) edges.emplace_back(i, i + 3);
  return {Graph(n, edges), Edge(0, 2)};
}

GeneratedGraph gen_six_cluster_base() {
  return {Graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {4, 2}, {4, 3}}), Edge(0, 1)};
}

GeneratedGraph gen_lemma57_1a() {
  return {Graph(7, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {5, 2}, {5, 3}, {6, 5}, {6, 4}}),
          Edge(0, 1)};
}

Graph clique_minor_block(int m) {
  require_size(m >= 3 && m <= 7, "clique minor block needs 3 <= m <= 7, got " + std::to_string(m));
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<Vertex> picked{0, 1, 2};
  Vertex next = 3;
  for (int size = 3; size < m; ++size) {
    Vertex prev = next++;
    edges.emplace_back(prev, picked[0]);
    edges.emplace_back(prev, picked[1]);
    for (int i = 2; i < size; ++i) {
      const Vertex w = next++;
      edges.emplace_back(w, prev);
      edges.emplace_back(w, picked[i]);
      prev = w;
    }
    picked.push_back(prev);
  }
  return Graph(next, edges);
}

GeneratedGraph gen_clique_minor_1path(int m) {
  require_size(m >= 3 && m <= 7, "clique-minor-1path needs 3 <= m <= 7, got " + std::to_string(m));
  const Graph block = clique_minor_block(m);
  const Graph frame = gen_fan(5).graph;
  // Frame edge (0,1) becomes the block; block vertices 0 and 1 are frame 0
  // and 1, the rest follow the frame's vertices.
  const int extra = block.vertex_count() - 2;
  std::vector<Edge> edges;
  for (const Edge& e : frame.edges()) {
    if (e != Edge(0, 1)) edges.push_back(e);
  }
  auto place = [&](Vertex b) { return b < 2 ? b : static_cast<Vertex>(frame.vertex_count() + b - 2); };
  for (const Edge& e : block.edges()) edges.emplace_back(place(e.u), place(e.w));
  return {Graph(frame.vertex_count() + extra, edges), Edge(0, 2)};
}

GeneratedGraph gen_clique_minor_trifree(int m) {
  require_size(m >= 3 && m <= 6, "clique-minor-trifree needs 3 <= m <= 6, got " + std::to_string(m));
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(0, 2 + i);
    edges.emplace_back(1, 2 + i);
  }
  Vertex next = static_cast<Vertex>(2 + m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      edges.emplace_back(next, 2 + i);
      edges.emplace_back(next, 2 + j);
      ++next;
    }
  }
  return {Graph(next, edges), Edge(0, 1)};
}

GeneratedGraph gen_random(const RandomOptions& opts) {
  require_size(opts.steps >= 1, "random needs at least one step, got " + std::to_string(opts.steps));
  std::mt19937_64 rng(opts.seed);
  auto pick = [&](int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(rng); };
  auto chance = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };

  std::vector<std::vector<char>> adjacent;
  std::vector<Edge> edges;
  auto add_vertex = [&] {
    for (auto& row : adjacent) row.push_back(0);
    adjacent.emplace_back(adjacent.size() + 1, 0);
    return static_cast<Vertex>(adjacent.size() - 1);
  };
  auto connect = [&](Vertex a, Vertex b) {
    adjacent[a][b] = adjacent[b][a] = 1;
    edges.emplace_back(a, b);
  };
  add_vertex();
  add_vertex();

  for (int step = 0; step < opts.steps; ++step) {
    const int n = static_cast<int>(adjacent.size());
    Vertex u = 0;
    Vertex w = 1;
    for (int attempt = 0; step > 0 && attempt < 64; ++attempt) {
      const Vertex a = opts.one_path_bias && chance(0.8) ? n - 1 : pick(n);
      const Vertex b = pick(n);
      if (a == b || (opts.triangle_free && adjacent[a][b])) continue;
      u = a;
      w = b;
      break;
    }
    if (!opts.triangle_free && step > 0 && chance(0.15)) {
      const Vertex x = add_vertex();
      const Vertex v = add_vertex();
      connect(u, x);
      connect(u, v);
      connect(x, v);
      connect(w, v);
    } else {
      const Vertex v = add_vertex();
      connect(u, v);
      connect(w, v);
    }
  }
  return {Graph(static_cast<int>(adjacent.size()), edges), Edge(0, 1)};
}

std::vector<std::string> family_names() {
  return {"fan", "six-cluster-base", "lemma57-1a", "clique-minor-1path", "clique-minor-trifree", "random"};
}

GeneratedGraph generate_family(std::string_view family, const std::vector<long long>& params) {
  auto size_param = [&](std::size_t count) {
    require_size(params.size() == count, std::string(family) + " takes " + std::to_string(count) +
                                              " parameter(s), got " + std::to_string(params.size()));
  };
  auto as_int = [](long long v) {
    require_size(v >= -(1LL << 30) && v <= (1LL << 30), "parameter out of range: " + std::to_string(v));
    return static_cast<int>(v);
  };
  if (family == "fan") {
    size_param(1);
    return gen_fan(as_int(params[0]));
  }
  if (family == "six-cluster-base") {
    size_param(0);
    return gen_six_cluster_base();
  }
  if (family == "lemma57-1a") {
    size_param(0);
    return gen_lemma57_1a();
  }
  if (family == "clique-minor-1path" || family == "1path-clique") {
    size_param(1);
    return gen_clique_minor_1path(as_int(params[0]));
  }
  if (family == "clique-minor-trifree" || family == "trifree-clique") {
    size_param(1);
    return gen_clique_minor_trifree(as_int(params[0]));
  }
  if (family == "random") {
    require_size(params.size() >= 2 && params.size() <= 4,
                 "random takes seed, steps and up to two 0/1 flags");
    require_size(params[0] >= 0, "random seed must be non-negative");
    RandomOptions opts;
    opts.seed = static_cast<std::uint64_t>(params[0]);
    opts.steps = as_int(params[1]);
    if (params.size() > 2) opts.triangle_free = params[2] != 0;
    if (params.size() > 3) opts.one_path_bias = params[3] != 0;
    return gen_random(opts);
  }
  throw Error(ErrorCode::UnknownFamily, "unknown family: " + std::string(family));
}

}  // namespace cayley
