#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "cayley/error.hpp"
#include "cayley/generators.hpp"
#include "cayley/planarity.hpp"
#include "cli.hpp"

namespace cayley::cli {
namespace {

struct InstanceResult {
  int base_non_edges = 0;
  bool planarity_checked = false;
  std::vector<Finding> findings;
};

InstanceResult check_instance(const Instance& inst) {
  InstanceResult res;
  const Graph& g = inst.graph.graph;
  auto report = [&](const std::string& kind) {
    res.findings.push_back({inst.name, kind, format_graph(g, inst.graph.base)});
  };
  try {
    const auto bases = find_base_non_edges(g);
    if (bases.empty()) {
      report("no base non-edge: " + diagnose(g));
      return res;
    }
    const ClusterSet clusters = maximal_clusters(g);
    std::vector<bool> verdicts;
    bool one_path = false;
    for (const Edge& f : bases) {
      const ConstructionSequence seq = derive_construction(g, f, clusters);
      const bool brute = low_cayley_brute(seq).low_complexity;
      const bool fast = low_cayley_fast(seq).low_complexity;
      if (brute != fast) {
        report("fast/brute disagreement on " + to_string(f) + ": fast=" + (fast ? "true" : "false") +
               " brute=" + (brute ? "true" : "false"));
      }
      verdicts.push_back(brute);
      one_path = one_path || is_one_path(seq);
    }
    res.base_non_edges = static_cast<int>(bases.size());
    if (std::adjacent_find(verdicts.begin(), verdicts.end(), std::not_equal_to<>()) != verdicts.end()) {
      report("base non-edge invariance violated");
    }
    if (one_path && is_triangle_free(g)) {
      res.planarity_checked = true;
      const bool planar = is_planar(g);
      if (planar != verdicts.front()) {
        report(std::string("planarity equivalence violated: planar=") + (planar ? "true" : "false") +
               " low_cayley=" + (verdicts.front() ? "true" : "false"));
      }
    }
  } catch (const Error& e) {
    report(std::string("error: ") + e.what());
  }
  return res;
}

}  // namespace

std::vector<Instance> verification_corpus(int budget, std::uint64_t seed) {
  std::vector<Instance> corpus;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < budget; ++i) {
    RandomOptions opts;
    opts.seed = rng();
    opts.triangle_free = i % 2 == 0;
    opts.one_path_bias = (i / 2) % 2 == 0;
    // Triangle steps add two vertices, so 14 steps stays within 30 vertices.
    opts.steps = 1 + static_cast<int>(rng() % 14);
    corpus.push_back({"random#" + std::to_string(i) + " seed=" + std::to_string(opts.seed) +
                          " steps=" + std::to_string(opts.steps) + " triangle_free=" +
                          std::to_string(opts.triangle_free) + " one_path_bias=" +
                          std::to_string(opts.one_path_bias),
                      gen_random(opts)});
  }
  for (int n = 3; n <= 12; ++n) corpus.push_back({"fan " + std::to_string(n), gen_fan(n)});
  corpus.push_back({"six-cluster-base", gen_six_cluster_base()});
  corpus.push_back({"lemma57-1a", gen_lemma57_1a()});
  for (int m = 3; m <= 7; ++m) corpus.push_back({"clique-minor-1path " + std::to_string(m), gen_clique_minor_1path(m)});
  for (int m = 3; m <= 6; ++m) {
    corpus.push_back({"clique-minor-trifree " + std::to_string(m), gen_clique_minor_trifree(m)});
  }
  return corpus;
}

VerifySummary verify_instances(const std::vector<Instance>& corpus, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, corpus.size()));
  std::vector<InstanceResult> results(corpus.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < corpus.size(); i = next++) results[i] = check_instance(corpus[i]);
    });
  }
  for (auto& th : pool) th.join();

  VerifySummary summary;
  summary.instances = static_cast<int>(corpus.size());
  for (auto& r : results) {
    summary.base_non_edges_checked += r.base_non_edges;
    summary.planarity_checked += r.planarity_checked ? 1 : 0;
    for (auto& f : r.findings) summary.findings.push_back(std::move(f));
  }
  return summary;
}

VerifySummary verify_theorems(const VerifyOptions& opts) {
  return verify_instances(verification_corpus(opts.budget, opts.seed), opts.threads);
}

}  // namespace cayley::cli
