#include <algorithm>
#include <chrono>
#include <sstream>

#include "cayley/error.hpp"
#include "cayley/planarity.hpp"
#include "cayley/rigidity.hpp"
#include "cli.hpp"

namespace cayley::cli {
namespace {

class PhaseClock {
 public:
  explicit PhaseClock(std::vector<PhaseTime>& sink) : sink_(sink) {}

  template <typename F>
  auto operator()(const char* phase, F&& work) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(work())>) {
      work();
      record(phase, start);
    } else {
      auto result = work();
      record(phase, start);
      return result;
    }
  }

 private:
  void record(const char* phase, std::chrono::steady_clock::time_point start) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    sink_.push_back({phase, ms.count()});
  }
  std::vector<PhaseTime>& sink_;
};

std::string edge_list(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ' ';
    out += to_string(e);
  }
  return out.empty() ? "none" : out;
}

nlohmann::ordered_json edge_json(const Edge& e) { return nlohmann::ordered_json::array({e.u, e.w}); }

nlohmann::ordered_json verdict_json(const CayleyVerdict& v) {
  nlohmann::ordered_json j;
  j["low_cayley"] = v.low_complexity;
  j["witness_step"] = v.witness_step ? nlohmann::ordered_json(*v.witness_step) : nlohmann::ordered_json();
  auto cycles = nlohmann::ordered_json::array();
  for (const auto& c : v.four_cycles) {
    cycles.push_back({{"step", c.step}, {"clusters", c.clusters}, {"shared", c.shared}});
  }
  j["four_cycles"] = cycles;
  return j;
}

}  // namespace

std::string diagnose(const Graph& g) {
  const long n = g.vertex_count();
  const long m = static_cast<long>(g.edge_count());
  std::ostringstream out;
  if (n < 2) {
    out << "fewer than two vertices";
    return out.str();
  }
  if (!g.is_connected()) {
    out << "graph is disconnected";
    return out.str();
  }
  if (m != 2 * n - 4) {
    out << "has " << m << " edges; a 1-dof graph on " << n << " vertices has " << 2 * n - 4;
    return out.str();
  }
  std::optional<Edge> first;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.has_edge(a, b)) continue;
      const Edge f(a, b);
      if (!first) first = f;
      if (check_rigidity(g.with_edge(f)).minimally_rigid) {
        out << "g + " << to_string(f) << " is minimally rigid but no completion is tree-decomposable";
        return out.str();
      }
    }
  }
  if (!first) {
    out << "no non-edge to add";
    return out.str();
  }
  const RigidityVerdict v = check_rigidity(g.with_edge(*first));
  out << "no completion is minimally rigid; g + " << to_string(*first) << " overbraces";
  if (v.violating_subgraph) {
    out << " vertices {";
    for (std::size_t i = 0; i < v.violating_subgraph->size(); ++i) {
      out << (i ? " " : "") << (*v.violating_subgraph)[i];
    }
    out << '}';
  }
  return out.str();
}

AnalysisReport analyze(const GraphFile& file, const AnalyzeOptions& opts) {
  const Graph& g = file.graph;
  AnalysisReport r;
  PhaseClock clock(r.timing);
  r.vertices = g.vertex_count();
  r.edges = static_cast<int>(g.edge_count());

  r.tree_decomposable = clock("tree_decomposable", [&] {
    try {
      return is_tree_decomposable(g).has_value();
    } catch (const Error&) {
      return false;
    }
  });
  r.base_non_edges = clock("base_non_edges", [&] { return find_base_non_edges(g); });
  if (r.base_non_edges.empty()) {
    throw Error(ErrorCode::NotOneDofTreeDecomposable, "not 1-dof tree-decomposable: " + diagnose(g));
  }

  const ClusterSet clusters = clock("clusters", [&] { return maximal_clusters(g); });
  r.clusters = static_cast<int>(clusters.size());
  r.base = r.base_non_edges.front();
  if (file.base && std::find(r.base_non_edges.begin(), r.base_non_edges.end(), *file.base) != r.base_non_edges.end()) {
    r.base = *file.base;
  }
  const ConstructionSequence seq = clock("construction", [&] { return derive_construction(g, r.base, clusters); });
  r.steps = seq.steps;

  FastOptions fast_opts;
  fast_opts.collect_four_cycles = true;
  r.fast = clock("low_cayley_fast", [&] { return low_cayley_fast(seq, fast_opts); });
  if (opts.brute) {
    r.brute = clock("low_cayley_brute", [&] { return low_cayley_brute(seq); });
    r.disagreement = r.brute->low_complexity != r.fast.low_complexity;
  }
  r.one_path_base = clock("one_path", [&] {
    std::optional<Edge> found;
    for (const Edge& f : r.base_non_edges) {
      if (is_one_path(derive_construction(g, f, clusters))) {
        found = f;
        break;
      }
    }
    return found;
  });
  r.triangle_free = is_triangle_free(g);
  r.planar = clock("planarity", [&] { return is_planar(g); });
  if (!r.planar) {
    clock("minor", [&] {
      try {
        if (auto w = has_minor(g, complete_bipartite_graph(3, 3))) {
          r.minor_target = "K3,3";
          r.minor = std::move(w);
        } else if (auto w5 = has_minor(g, complete_graph(5))) {
          r.minor_target = "K5";
          r.minor = std::move(w5);
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::HostTooLarge) throw;
        r.minor_target = "skipped";
      }
    });
  }
  if (opts.all_base_non_edges) {
    r.invariance = clock("invariance", [&] { return verify_base_invariance(g); });
  }
  if (!opts.timing) r.timing.clear();
  return r;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "vertices " << r.vertices << '\n';
  out << "edges " << r.edges << '\n';
  out << "clusters " << r.clusters << '\n';
  out << "tree_decomposable " << (r.tree_decomposable ? "true" : "false") << '\n';
  out << "base_non_edges " << edge_list(r.base_non_edges) << '\n';
  out << "base " << r.base.u << ' ' << r.base.w << '\n';
  for (const auto& s : r.steps) {
    out << "step " << s.new_vertex << ' ' << s.u << ' ' << s.w << ' ' << s.level << '\n';
  }
  out << "one_path " << (r.one_path_base ? "true " + to_string(*r.one_path_base) : "false") << '\n';
  out << "triangle_free " << (r.triangle_free ? "true" : "false") << '\n';
  out << "planar " << (r.planar ? "true" : "false") << '\n';
  if (!r.minor_target.empty()) {
    out << "minor " << r.minor_target;
    if (r.minor) {
      for (const auto& set : r.minor->branch_sets) {
        out << " {";
        for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
        out << '}';
      }
    }
    out << '\n';
  }
  out << "[fast]\n" << format_verdict(r.fast);
  if (r.brute) {
    out << "[brute]\n" << format_verdict(*r.brute);
    out << "agreement " << (r.disagreement ? "DISAGREEMENT" : "ok") << '\n';
  }
  if (r.invariance) {
    out << "invariance " << (r.invariance->passed ? "pass" : "FAIL");
    for (std::size_t i = 0; i < r.invariance->base_non_edges.size(); ++i) {
      out << ' ' << to_string(r.invariance->base_non_edges[i]) << '='
          << (r.invariance->verdicts[i] ? "true" : "false");
    }
    out << '\n';
  }
  for (const auto& t : r.timing) out << "time_ms " << t.phase << ' ' << t.ms << '\n';
  return out.str();
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["clusters"] = r.clusters;
  j["tree_decomposable"] = r.tree_decomposable;
  auto bases = nlohmann::ordered_json::array();
  for (const Edge& e : r.base_non_edges) bases.push_back(edge_json(e));
  j["base_non_edges"] = bases;
  j["base"] = edge_json(r.base);
  auto steps = nlohmann::ordered_json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"vertex", s.new_vertex}, {"u", s.u}, {"w", s.w}, {"level", s.level}});
  }
  j["steps"] = steps;
  j["one_path"] = r.one_path_base ? edge_json(*r.one_path_base) : nlohmann::ordered_json();
  j["triangle_free"] = r.triangle_free;
  j["planar"] = r.planar;
  if (!r.minor_target.empty()) {
    nlohmann::ordered_json m;
    m["target"] = r.minor_target;
    m["branch_sets"] = r.minor ? nlohmann::ordered_json(r.minor->branch_sets) : nlohmann::ordered_json();
    j["minor"] = m;
  }
  j["fast"] = verdict_json(r.fast);
  if (r.brute) {
    j["brute"] = verdict_json(*r.brute);
    j["agreement"] = r.disagreement ? "DISAGREEMENT" : "ok";
  }
  if (r.invariance) {
    nlohmann::ordered_json inv;
    inv["passed"] = r.invariance->passed;
    auto verdicts = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.invariance->base_non_edges.size(); ++i) {
      verdicts.push_back({{"base", edge_json(r.invariance->base_non_edges[i])},
                          {"low_cayley", static_cast<bool>(r.invariance->verdicts[i])}});
    }
    inv["verdicts"] = verdicts;
    j["invariance"] = inv;
  }
  if (!r.timing.empty()) {
    nlohmann::ordered_json t;
    for (const auto& p : r.timing) t[p.phase] = p.ms;
    j["timing_ms"] = t;
  }
  return j;
}

}  // namespace cayley::cli
