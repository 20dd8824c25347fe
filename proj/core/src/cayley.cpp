#include "cayley/cayley.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "cayley/error.hpp"

namespace cayley {
namespace {

std::uint64_t pair_key(ClusterId a, ClusterId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

std::string format_verdict(const CayleyVerdict& verdict) {
  std::ostringstream out;
  out << "verdict " << (verdict.low_complexity ? "true" : "false") << '\n';
  if (verdict.witness_step) out << "witness_step " << *verdict.witness_step << '\n';
  for (const auto& c : verdict.four_cycles) {
    out << "fourcycle " << c.step;
    for (ClusterId t : c.clusters) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

CayleyVerdict low_cayley_brute(const ConstructionSequence& seq, const BruteOptions& opts) {
  const int steps = static_cast<int>(seq.steps.size());
  auto decomposable = [&](int k) { return is_tree_decomposable(extreme_graph(seq, k).graph).has_value(); };

  CayleyVerdict verdict;
  const unsigned threads = std::min<unsigned>(std::max(1u, opts.threads), std::max(1, steps));
  if (threads <= 1) {
    for (int k = 1; k <= steps; ++k) {
      if (!decomposable(k)) {
        verdict.low_complexity = false;
        verdict.witness_step = k;
        break;
      }
    }
    return verdict;
  }

  // Workers pull steps in order; any k past the best failure so far is skipped.
  std::atomic<int> next{1};
  std::atomic<int> first_failure{steps + 1};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int k = next++; k <= steps && k < first_failure.load(); k = next++) {
        if (decomposable(k)) continue;
        int seen = first_failure.load();
        while (k < seen && !first_failure.compare_exchange_weak(seen, k)) {
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_failure.load() <= steps) {
    verdict.low_complexity = false;
    verdict.witness_step = first_failure.load();
  }
  return verdict;
}

CayleyVerdict low_cayley_brute(const Graph& g, const Edge& f, const BruteOptions& opts) {
  return low_cayley_brute(derive_construction(g, f), opts);
}

CayleyVerdict low_cayley_fast(const ConstructionSequence& seq, const FastOptions& opts) {
  CayleyVerdict verdict;
  if (seq.clusters.size() < 6) return verdict;

  const ClusterSet& cs = seq.clusters;
  std::vector<char> introduced(cs.size(), 0);
  std::vector<char> constructed(seq.graph.vertex_count(), 0);
  constructed[seq.base.u] = constructed[seq.base.w] = 1;
  std::unordered_set<std::uint64_t> admissible;
  admissible.reserve(4 * cs.size());

  auto present = [&](Vertex v) {
    std::vector<ClusterId> out;
    for (ClusterId c : cs.clusters_of(v)) {
      if (introduced[c]) out.push_back(c);
    }
    return out;
  };

  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const ConstructionStep& s = seq.steps[i];
    const int k = static_cast<int>(i) + 1;
    const auto around_u = present(s.u);
    const auto around_w = present(s.w);
    // Pairs (T_u, T_w) meeting in one vertex away from u and w close a
    // four-cycle with the two new clusters.
    std::vector<std::pair<ClusterId, ClusterId>> closing;
    for (ClusterId tu : around_u) {
      for (ClusterId tw : around_w) {
        if (tu == tw || cs.shared_count(tu, tw, 2) != 1) continue;
        const Vertex p = *cs.shared_vertex(tu, tw);
        if (p != s.u && p != s.w) closing.emplace_back(tu, tw);
      }
    }
    if (s.level > 1) {
      const bool usable = std::any_of(closing.begin(), closing.end(), [&](const auto& tt) {
        return admissible.count(pair_key(tt.first, tt.second)) > 0;
      });
      if (!usable) {
        verdict.low_complexity = false;
        verdict.witness_step = k;
        verdict.four_cycles.clear();
        return verdict;
      }
    }
    for (const auto& [tu, tw] : closing) {
      admissible.insert(pair_key(s.cluster_a, tu));
      admissible.insert(pair_key(s.cluster_b, tw));
      admissible.insert(pair_key(tu, tw));
    }
    if (s.level > 1 && opts.collect_four_cycles) {
      std::vector<Vertex> done;
      for (Vertex v = 0; v < seq.graph.vertex_count(); ++v) {
        if (constructed[v]) done.push_back(v);
      }
      if (auto cycle = find_four_cycle(cs, done, s.u, s.w)) {
        cycle->step = k;
        verdict.four_cycles.push_back(*cycle);
      }
    }
    admissible.insert(pair_key(s.cluster_a, s.cluster_b));
    introduced[s.cluster_a] = introduced[s.cluster_b] = 1;
    for (ClusterId c : {s.cluster_a, s.cluster_b}) {
      for (Vertex v : cs[c].vertices) constructed[v] = 1;
    }
  }
  return verdict;
}

CayleyVerdict low_cayley_fast(const Graph& g, const Edge& f, const FastOptions& opts) {
  return low_cayley_fast(derive_construction(g, f), opts);
}

CayleyVerdict low_cayley_graph(const Graph& g, Recognizer how) {
  const auto f = first_base_non_edge(g);
  if (!f) {
    throw Error(ErrorCode::NotOneDofTreeDecomposable,
                "graph has no base non-edge, so it is not 1-dof tree-decomposable");
  }
  const ConstructionSequence seq = derive_construction(g, *f);
  return how == Recognizer::Fast ? low_cayley_fast(seq) : low_cayley_brute(seq);
}

InvarianceReport verify_base_invariance(const Graph& g) {
  InvarianceReport report;
  report.base_non_edges = find_base_non_edges(g);
  if (report.base_non_edges.empty()) {
    throw Error(ErrorCode::NotOneDofTreeDecomposable,
                "graph has no base non-edge, so it is not 1-dof tree-decomposable");
  }
  const ClusterSet clusters = maximal_clusters(g);
  for (const Edge& f : report.base_non_edges) {
    report.verdicts.push_back(low_cayley_brute(derive_construction(g, f, clusters)).low_complexity);
  }
  report.passed = std::adjacent_find(report.verdicts.begin(), report.verdicts.end(),
                                     std::not_equal_to<>()) == report.verdicts.end();
  return report;
}

std::optional<FourCycle> find_four_cycle(const ClusterSet& cs, std::span<const Vertex> constructed, Vertex u,
                                         Vertex w) {
  if (u == w || u < 0 || w < 0 || u >= cs.vertex_count() || w >= cs.vertex_count()) return std::nullopt;
  std::vector<char> done(cs.vertex_count(), 0);
  for (Vertex v : constructed) done[v] = 1;
  std::vector<char> complete(cs.size(), 0);
  for (ClusterId c = 0; c < static_cast<ClusterId>(cs.size()); ++c) {
    const auto& vs = cs[c].vertices;
    complete[c] = std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return done[v] != 0; });
  }
  auto single_shared = [&](ClusterId a, ClusterId b) -> std::optional<Vertex> {
    if (cs.shared_count(a, b, 2) != 1) return std::nullopt;
    return cs.shared_vertex(a, b);
  };

  for (ClusterId t1 : cs.clusters_of(u)) {
    if (!complete[t1]) continue;
    for (ClusterId t2 : cs.clusters_of(w)) {
      if (!complete[t2] || t2 == t1) continue;
      const auto p1 = single_shared(t1, t2);
      if (!p1 || *p1 == u || *p1 == w) continue;
      for (Vertex p4 : cs[t1].vertices) {
        if (p4 == *p1 || cs.cdeg(p4) < 2) continue;
        for (ClusterId t4 : cs.clusters_of(p4)) {
          if (!complete[t4] || t4 == t1 || t4 == t2 || single_shared(t4, t1) != p4) continue;
          for (Vertex p2 : cs[t4].vertices) {
            if (p2 == p4 || p2 == *p1 || cs.cdeg(p2) < 2) continue;
            for (ClusterId t3 : cs.clusters_of(p2)) {
              if (!complete[t3] || t3 == t1 || t3 == t2 || t3 == t4) continue;
              if (single_shared(t3, t4) != p2) continue;
              const auto p3 = single_shared(t2, t3);
              if (!p3 || *p3 == *p1 || *p3 == p2 || *p3 == p4) continue;
              return FourCycle{0, {t1, t2, t3, t4}, {*p1, p2, *p3, p4}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<FourCycle> find_four_cycle(const ConstructionSequence& seq, int k) {
  if (k < 1 || k > static_cast<int>(seq.steps.size())) {
    throw Error(ErrorCode::IndexOutOfRange, "step " + std::to_string(k) + " out of range");
  }
  std::vector<char> done(seq.graph.vertex_count(), 0);
  done[seq.base.u] = done[seq.base.w] = 1;
  for (int i = 0; i + 1 < k; ++i) {
    for (ClusterId c : {seq.steps[i].cluster_a, seq.steps[i].cluster_b}) {
      for (Vertex v : seq.clusters[c].vertices) done[v] = 1;
    }
  }
  std::vector<Vertex> constructed;
  for (Vertex v = 0; v < seq.graph.vertex_count(); ++v) {
    if (done[v]) constructed.push_back(v);
  }
  auto cycle = find_four_cycle(seq.clusters, constructed, seq.steps[k - 1].u, seq.steps[k - 1].w);
  if (cycle) cycle->step = k;
  return cycle;
}

bool is_valid_four_cycle(const ClusterSet& cs, const FourCycle& c) {
  const auto& t = c.clusters;
  const auto& p = c.shared;
  for (ClusterId x : t) {
    if (x < 0 || x >= static_cast<ClusterId>(cs.size())) return false;
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (t[i] == t[j] || p[i] == p[j]) return false;
    }
  }
  auto meets_exactly = [&](ClusterId a, ClusterId b, Vertex v) {
    return cs.shared_count(a, b, 2) == 1 && cs.shared_vertex(a, b) == v;
  };
  return meets_exactly(t[0], t[1], p[0]) && meets_exactly(t[1], t[2], p[2]) &&
         meets_exactly(t[2], t[3], p[1]) && meets_exactly(t[3], t[0], p[3]);
}

}  // namespace cayley
