#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "cayley/generators.hpp"
#include "cli.hpp"

namespace cayley::cli {
namespace {

GeneratedGraph bench_graph(const std::string& family, int n) {
  if (family == "fan") return gen_fan(n);
  RandomOptions opts;
  opts.seed = static_cast<std::uint64_t>(n);
  opts.steps = n - 2;
  opts.triangle_free = true;
  return gen_random(opts);
}

// Median over `repeats` samples; each sample loops until it has run for at
// least a millisecond so tiny inputs still get a stable reading.
template <typename F>
double median_ms(int repeats, F&& work) {
  using clock = std::chrono::steady_clock;
  std::vector<double> samples;
  for (int r = 0; r < std::max(1, repeats); ++r) {
    int runs = 0;
    const auto start = clock::now();
    std::chrono::duration<double, std::milli> elapsed{};
    do {
      work();
      ++runs;
      elapsed = clock::now() - start;
    } while (elapsed.count() < 1.0);
    samples.push_back(elapsed.count() / runs);
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace

std::vector<int> bench_sizes(int max_n) {
  std::vector<int> sizes;
  for (int n = 10; n < max_n; n *= 2) sizes.push_back(n);
  sizes.push_back(max_n);
  return sizes;
}

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  std::vector<int> sizes = bench_sizes(opts.max_n);
  if (opts.brute_cap > 10 && opts.brute_cap < opts.max_n) {
    sizes.push_back(opts.brute_cap);
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  }
  std::vector<BenchRow> rows;
  for (const std::string& family : opts.families) {
    for (int n : sizes) {
      const GeneratedGraph gg = bench_graph(family, n);
      rows.push_back({family, n, "fast", median_ms(opts.repeats, [&] { low_cayley_fast(gg.graph, gg.base); })});
      if (n <= opts.brute_cap) {
        rows.push_back({family, n, "brute", median_ms(opts.repeats, [&] { low_cayley_brute(gg.graph, gg.base); })});
      }
    }
  }
  return rows;
}

std::string format_bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "family,n,algo,median_ms\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", r.median_ms);
    out += r.family + ',' + std::to_string(r.n) + ',' + r.algo + ',' + buf + '\n';
  }
  return out;
}

std::optional<double> fit_exponent(const std::vector<BenchRow>& rows, const std::string& family,
                                   const std::string& algo) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : rows) {
    if (r.family != family || r.algo != algo || r.median_ms <= 0.0) continue;
    xs.push_back(std::log(static_cast<double>(r.n)));
    ys.push_back(std::log(r.median_ms));
  }
  if (xs.size() < 2) return std::nullopt;
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace cayley::cli
