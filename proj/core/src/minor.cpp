#include "cayley/minor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "cayley/error.hpp"

namespace cayley {
namespace {

using Mask = std::uint64_t;
constexpr int kMaxKernel = 64;
constexpr std::size_t kMaxConnectedSets = 1u << 22;

Mask bit(int v) { return Mask{1} << v; }
int lowest(Mask m) { return std::countr_zero(m); }

// Host after minor-preserving reductions; kernel vertex i stands for the
// original vertices in groups[i].
struct Kernel {
  std::vector<Mask> adj;
  std::vector<std::vector<Vertex>> groups;
  int size() const { return static_cast<int>(adj.size()); }
};

Kernel reduce_host(const Graph& host, int target_min_degree) {
  const int n = host.vertex_count();
  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : host.edges()) {
    adj[e.u].insert(e.w);
    adj[e.w].insert(e.u);
  }
  std::vector<std::vector<Vertex>> groups(n);
  for (Vertex v = 0; v < n; ++v) groups[v] = {v};
  std::vector<char> alive(n, 1);

  auto remove_vertex = [&](Vertex v) {
    for (Vertex x : adj[v]) adj[x].erase(v);
    adj[v].clear();
    alive[v] = 0;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      const auto deg = adj[v].size();
      if (target_min_degree >= 2 && deg <= 1) {
        remove_vertex(v);
        changed = true;
      } else if (target_min_degree >= 3 && deg == 2) {
        Vertex a = *adj[v].begin();
        Vertex b = *std::next(adj[v].begin());
        groups[a].insert(groups[a].end(), groups[v].begin(), groups[v].end());
        remove_vertex(v);
        adj[a].insert(b);
        adj[b].insert(a);
        changed = true;
      }
    }
  }

  std::vector<Vertex> kernel_id(n, -1);
  Kernel k;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    kernel_id[v] = k.size();
    k.adj.push_back(0);
    std::sort(groups[v].begin(), groups[v].end());
    k.groups.push_back(std::move(groups[v]));
  }
  if (k.size() > kMaxKernel) return k;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (Vertex x : adj[v]) k.adj[kernel_id[v]] |= bit(kernel_id[x]);
  }
  return k;
}

// Every connected vertex subset of size <= max_size, each exactly once.
class ConnectedSets {
 public:
  ConnectedSets(const std::vector<Mask>& adj, int max_size) : adj_(adj), max_size_(max_size) {
    const int n = static_cast<int>(adj.size());
    for (int r = 0; r < n; ++r) {
      Mask below = bit(r) - 1;
      extend(bit(r), adj[r] & ~below, below | bit(r));
    }
  }

  bool overflowed() const { return overflow_; }
  std::vector<Mask> take() { return std::move(sets_); }

 private:
  void extend(Mask set, Mask frontier, Mask forbidden) {
    if (overflow_) return;
    sets_.push_back(set);
    if (sets_.size() > kMaxConnectedSets) {
      overflow_ = true;
      return;
    }
    if (std::popcount(set) >= max_size_) return;
    while (frontier) {
      const int v = lowest(frontier);
      frontier &= frontier - 1;
      const Mask grown = set | bit(v);
      extend(grown, (frontier | adj_[v]) & ~grown & ~forbidden, forbidden);
      forbidden |= bit(v);
    }
  }

  const std::vector<Mask>& adj_;
  int max_size_;
  bool overflow_ = false;
  std::vector<Mask> sets_;
};

class ModelSearch {
 public:
  ModelSearch(const Kernel& kernel, const Graph& target) : kernel_(kernel), target_(target) {
    const int k = target.vertex_count();
    const int n = kernel.size();
    all_ = n == 64 ? ~Mask{0} : bit(n) - 1;

    ConnectedSets enumerator(kernel.adj, n - k + 1);
    if (enumerator.overflowed()) {
      throw Error(ErrorCode::HostTooLarge, "minor search space exceeds the enumeration budget");
    }
    sets_ = enumerator.take();
    std::stable_sort(sets_.begin(), sets_.end(), [](Mask a, Mask b) {
      return std::popcount(a) < std::popcount(b);
    });
    boundary_.reserve(sets_.size());
    for (Mask s : sets_) {
      Mask nb = 0;
      for (Mask m = s; m; m &= m - 1) nb |= kernel.adj[lowest(m)];
      boundary_.push_back(nb & ~s);
    }
    order_targets();
  }

  std::optional<std::vector<Mask>> run() {
    placed_.assign(target_.vertex_count(), 0);
    if (!place(0, 0)) return std::nullopt;
    return placed_;
  }

 private:
  void order_targets() {
    const int k = target_.vertex_count();
    std::vector<char> used(k, 0);
    for (int step = 0; step < k; ++step) {
      int best = -1;
      int best_placed = -1;
      for (int t = 0; t < k; ++t) {
        if (used[t]) continue;
        int placed = 0;
        for (Vertex x : target_.neighbors(t)) placed += used[x];
        if (placed > best_placed ||
            (placed == best_placed && target_.degree(t) > target_.degree(best))) {
          best = t;
          best_placed = placed;
        }
      }
      used[best] = 1;
      order_.push_back(best);
    }
    // Twins (same neighbourhood up to each other) are interchangeable; force
    // their branch sets into increasing order of smallest vertex.
    twin_before_.assign(k, -1);
    for (int i = 0; i < k; ++i) {
      for (int j = i - 1; j >= 0; --j) {
        if (are_twins(order_[i], order_[j])) {
          twin_before_[i] = order_[j];
          break;
        }
      }
    }
  }

  bool are_twins(Vertex a, Vertex b) const {
    std::vector<Vertex> na, nb;
    for (Vertex x : target_.neighbors(a)) if (x != b) na.push_back(x);
    for (Vertex x : target_.neighbors(b)) if (x != a) nb.push_back(x);
    return na == nb;
  }

  bool place(int depth, Mask used) {
    const int k = target_.vertex_count();
    if (depth == k) return true;
    const Vertex t = order_[depth];
    const int remaining_after = k - depth - 1;
    const int twin = twin_before_[depth];
    const int twin_min = twin >= 0 ? lowest(placed_[twin]) : -1;

    for (std::size_t i = 0; i < sets_.size(); ++i) {
      const Mask s = sets_[i];
      if (s & used) continue;
      if (lowest(s) <= twin_min) continue;
      if (std::popcount(all_ & ~used & ~s) < remaining_after) continue;
      bool adjacent_to_all = true;
      for (Vertex x : target_.neighbors(t)) {
        if (placed_[x] && !(boundary_[i] & placed_[x])) {
          adjacent_to_all = false;
          break;
        }
      }
      if (!adjacent_to_all) continue;
      placed_[t] = s;
      if (place(depth + 1, used | s)) return true;
      placed_[t] = 0;
    }
    return false;
  }

  const Kernel& kernel_;
  const Graph& target_;
  Mask all_ = 0;
  std::vector<Mask> sets_;
  std::vector<Mask> boundary_;
  std::vector<Vertex> order_;
  std::vector<int> twin_before_;
  std::vector<Mask> placed_;
};

}  // namespace

std::optional<MinorWitness> has_minor(const Graph& host, const Graph& target,
                                      int max_host_vertices) {
  const int k = target.vertex_count();
  if (k == 0) return MinorWitness{};
  if (k > host.vertex_count() || target.edge_count() > host.edge_count()) return std::nullopt;

  int min_degree = host.vertex_count();
  for (Vertex t = 0; t < k; ++t) min_degree = std::min(min_degree, target.degree(t));

  Kernel kernel = reduce_host(host, min_degree);
  const int limit = std::min(max_host_vertices, kMaxKernel);
  if (kernel.size() > limit) {
    throw Error(ErrorCode::HostTooLarge,
                "reduced host has " + std::to_string(kernel.size()) +
                    " vertices, limit is " + std::to_string(limit));
  }
  if (kernel.size() < k) return std::nullopt;

  ModelSearch search(kernel, target);
  auto model = search.run();
  if (!model) return std::nullopt;

  MinorWitness witness;
  std::vector<int> owner(host.vertex_count(), -1);
  for (Vertex t = 0; t < k; ++t) {
    std::vector<Vertex> branch;
    for (Mask m = (*model)[t]; m; m &= m - 1) {
      const auto& g = kernel.groups[lowest(m)];
      branch.insert(branch.end(), g.begin(), g.end());
    }
    std::sort(branch.begin(), branch.end());
    for (Vertex v : branch) owner[v] = t;
    witness.branch_sets.push_back(std::move(branch));
  }
  for (const Edge& te : target.edges()) {
    for (const Edge& he : host.edges()) {
      if ((owner[he.u] == te.u && owner[he.w] == te.w) ||
          (owner[he.u] == te.w && owner[he.w] == te.u)) {
        witness.connecting_edges.push_back(he);
        break;
      }
    }
  }
  return witness;
}

bool is_valid_minor_witness(const Graph& host, const Graph& target, const MinorWitness& w) {
  const int k = target.vertex_count();
  if (static_cast<int>(w.branch_sets.size()) != k) return false;
  if (w.connecting_edges.size() != target.edge_count()) return false;

  std::vector<int> owner(host.vertex_count(), -1);
  for (int t = 0; t < k; ++t) {
    const auto& branch = w.branch_sets[t];
    if (branch.empty()) return false;
    for (Vertex v : branch) {
      if (!host.has_vertex(v) || owner[v] != -1) return false;
      owner[v] = t;
    }
    std::vector<Vertex> stack{branch.front()};
    std::vector<char> seen(host.vertex_count(), 0);
    seen[branch.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex x : host.neighbors(v)) {
        if (owner[x] == t && !seen[x]) {
          seen[x] = 1;
          ++reached;
          stack.push_back(x);
        }
      }
    }
    if (reached != branch.size()) return false;
  }
  for (std::size_t i = 0; i < target.edge_count(); ++i) {
    const Edge& te = target.edges()[i];
    const Edge& he = w.connecting_edges[i];
    if (!host.has_edge(he)) return false;
    const bool forward = owner[he.u] == te.u && owner[he.w] == te.w;
    const bool backward = owner[he.u] == te.w && owner[he.w] == te.u;
    if (!forward && !backward) return false;
  }
  return true;
}

}  // namespace cayley
