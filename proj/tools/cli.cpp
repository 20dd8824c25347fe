#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cayley/error.hpp"
#include "cayley/generators.hpp"
#include "cli.hpp"

namespace cayley::cli {

int cmd_analyze(const std::string& path, const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  AnalysisReport report;
  try {
    report = analyze(read_graph_file(path), opts);
  } catch (const Error& e) {
    err << path << ": " << e.what() << '\n';
    return kInputError;
  }
  if (opts.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << render_text(report);
  }
  const bool violated = report.disagreement || (report.invariance && !report.invariance->passed);
  return violated ? kViolation : kOk;
}

int cmd_generate(const std::string& family, const std::vector<long long>& params, std::ostream& out,
                 std::ostream& err) {
  try {
    const GeneratedGraph gg = generate_family(family, params);
    write_graph(out, gg.graph, gg.base);
  } catch (const Error& e) {
    err << "generate: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.max_n < 10) {
    err << "bench: max_n must be at least 10\n";
    return kInputError;
  }
  for (const auto& f : opts.families) {
    if (f != "fan" && f != "random") {
      err << "bench: unknown family " << f << '\n';
      return kInputError;
    }
  }
  out << format_bench_csv(run_bench(opts));
  return kOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.budget < 1) {
    err << "verify: budget must be at least 1\n";
    return kInputError;
  }
  const VerifySummary s = verify_theorems(opts);
  for (const auto& f : s.findings) {
    out << "# counterexample: " << f.instance << '\n' << "# " << f.kind << '\n' << f.graph_file;
  }
  out << "instances " << s.instances << '\n';
  out << "base_non_edges " << s.base_non_edges_checked << '\n';
  out << "planarity_checked " << s.planarity_checked << '\n';
  out << "findings " << s.findings.size() << '\n';
  out << (s.passed() ? "PASS" : "FAIL") << '\n';
  return s.passed() ? kOk : kViolation;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyse 1-dof tree-decomposable graphs for low Cayley complexity"};
  app.require_subcommand(1);

  std::string path;
  AnalyzeOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyse a graph file");
  analyze_cmd->add_option("file", path, "Graph file")->required();
  analyze_cmd->add_flag("--brute", analyze_opts.brute, "Also run the extreme-graph check");
  analyze_cmd->add_flag("--all-base-non-edges", analyze_opts.all_base_non_edges,
                        "Check that every base non-edge gives the same verdict");
  analyze_cmd->add_flag("--json", analyze_opts.json, "Emit JSON");
  analyze_cmd->add_flag("--timing", analyze_opts.timing, "Report per-phase timings");

  std::string family;
  std::vector<long long> params;
  std::string output;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph file");
  generate_cmd->add_option("family", family, "One of: fan, six-cluster-base, lemma57-1a, "
                                             "clique-minor-1path, clique-minor-trifree, random")
      ->required();
  generate_cmd->add_option("params", params, "Size parameter(s); random takes seed steps [tf] [bias]");
  generate_cmd->add_option("-o,--output", output, "Write to this file instead of stdout");

  BenchOptions bench_opts;
  bench_opts.max_n = 2000;
  auto* bench_cmd = app.add_subcommand("bench", "Time both recognizers; prints CSV");
  bench_cmd->add_option("--max-n", bench_opts.max_n, "Largest size")->capture_default_str();
  bench_cmd->add_option("--repeats", bench_opts.repeats, "Samples per measurement")->capture_default_str();
  bench_cmd->add_option("--brute-cap", bench_opts.brute_cap, "Largest size for the brute check")
      ->capture_default_str();
  bench_cmd->add_option("--family", bench_opts.families, "fan and/or random")->capture_default_str();

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the recognizers on a generated corpus");
  verify_cmd->add_option("--budget", verify_opts.budget, "Number of random graphs")->capture_default_str();
  verify_cmd->add_option("--seed", verify_opts.seed, "Corpus seed")->capture_default_str();
  verify_cmd->add_option("--threads", verify_opts.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (*analyze_cmd) return cmd_analyze(path, analyze_opts, out, err);
  if (*generate_cmd) {
    if (output.empty()) return cmd_generate(family, params, out, err);
    std::ofstream file(output);
    if (!file) {
      err << "generate: cannot write " << output << '\n';
      return kInputError;
    }
    return cmd_generate(family, params, file, err);
  }
  if (*bench_cmd) return cmd_bench(bench_opts, out, err);
  return cmd_verify(verify_opts, out, err);
}

}  // namespace cayley::cli
