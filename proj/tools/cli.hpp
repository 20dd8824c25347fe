#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayley/cayley.hpp"
#include "cayley/generators.hpp"
#include "cayley/graph_io.hpp"
#include "cayley/minor.hpp"

namespace cayley::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

struct AnalyzeOptions {
  bool brute = false;
  bool all_base_non_edges = false;
  bool json = false;
  bool timing = false;
};

struct PhaseTime {
  std::string phase;
  double ms = 0.0;
};

struct AnalysisReport {
  int vertices = 0;
  int edges = 0;
  int clusters = 0;
  bool tree_decomposable = false;
  std::vector<Edge> base_non_edges;
  Edge base;
  std::vector<ConstructionStep> steps;
  CayleyVerdict fast;
  std::optional<CayleyVerdict> brute;
  bool disagreement = false;
  std::optional<Edge> one_path_base;
  bool triangle_free = false;
  bool planar = false;
  std::string minor_target;  // "K3,3", "K5", "skipped" or empty when planar
  std::optional<MinorWitness> minor;
  std::optional<InvarianceReport> invariance;
  std::vector<PhaseTime> timing;
};

/// Throws Error(NotOneDofTreeDecomposable) with a rigidity diagnosis.
AnalysisReport analyze(const GraphFile& file, const AnalyzeOptions& opts);
std::string render_text(const AnalysisReport& report);
nlohmann::ordered_json to_json(const AnalysisReport& report);

/// Why g is not 1-dof tree-decomposable, in one line.
std::string diagnose(const Graph& g);

struct BenchRow {
  std::string family;
  int n = 0;
  std::string algo;
  double median_ms = 0.0;
};

struct BenchOptions {
  int max_n = 10;
  int repeats = 3;
  int brute_cap = 300;
  std::vector<std::string> families{"fan", "random"};
};

/// 10, 20, 40, ... below max_n, then max_n.
std::vector<int> bench_sizes(int max_n);
std::vector<BenchRow> run_bench(const BenchOptions& opts);
std::string format_bench_csv(const std::vector<BenchRow>& rows);
/// Least-squares slope of log(median_ms) against log(n).
std::optional<double> fit_exponent(const std::vector<BenchRow>& rows, const std::string& family,
                                   const std::string& algo);

struct VerifyOptions {
  int budget = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct Finding {
  std::string instance;
  std::string kind;
  std::string graph_file;
};

struct VerifySummary {
  int instances = 0;
  int base_non_edges_checked = 0;
  int planarity_checked = 0;
  std::vector<Finding> findings;
  bool passed() const { return findings.empty(); }
};

struct Instance {
  std::string name;
  GeneratedGraph graph;
};

/// `budget` seeded random graphs (at most 30 vertices) followed by the fixed
/// families.
std::vector<Instance> verification_corpus(int budget, std::uint64_t seed);
VerifySummary verify_instances(const std::vector<Instance>& corpus, unsigned threads = 0);
VerifySummary verify_theorems(const VerifyOptions& opts);

int cmd_analyze(const std::string& path, const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_generate(const std::string& family, const std::vector<long long>& params, std::ostream& out,
                 std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

/// Full command line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
