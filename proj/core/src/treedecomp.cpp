#include "cayley/treedecomp.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <set>
#include <sstream>

#include "cayley/error.hpp"

namespace cayley {
namespace {

struct Triple {
  int a, b, c;
  Vertex ab, bc, ca;
};

class ClusterMerger {
 public:
  ClusterMerger(const Graph& g, const MergeOptions& options) : incidence_(g.vertex_count()) {
    if (options.shuffle_seed) rng_.emplace(*options.shuffle_seed);
    nodes_.reserve(2 * g.edge_count());
    for (const Edge& e : g.edges()) {
      DecompositionNode leaf;
      leaf.vertices = {e.u, e.w};
      add_node(std::move(leaf));
    }
  }

  void run() {
    std::set<int> pending;
    for (int id = 0; id < static_cast<int>(nodes_.size()); ++id) pending.insert(id);
    std::vector<int> shuffled;
    while (!pending.empty()) {
      int id;
      if (rng_) {
        auto it = pending.begin();
        std::advance(it, std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(*rng_));
        id = *it;
        pending.erase(it);
      } else {
        id = *pending.begin();
        pending.erase(pending.begin());
      }
      if (!active_[id]) continue;
      if (auto t = find_triple(id)) {
        // Only the new cluster can take part in a merge that was not
        // possible before.
        pending.insert(merge(*t));
      }
    }
  }

  std::vector<int> roots() const {
    std::vector<int> out;
    for (int id = 0; id < static_cast<int>(nodes_.size()); ++id) {
      if (active_[id]) out.push_back(id);
    }
    return out;
  }

  std::vector<DecompositionNode>& nodes() { return nodes_; }

  std::vector<Edge> leaf_edges(int id) const {
    std::vector<Edge> out;
    std::vector<int> stack{id};
    while (!stack.empty()) {
      const auto& node = nodes_[stack.back()];
      stack.pop_back();
      if (node.is_leaf()) {
        out.push_back(node.edge());
      } else {
        stack.insert(stack.end(), node.children.begin(), node.children.end());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int add_node(DecompositionNode node) {
    const int id = static_cast<int>(nodes_.size());
    for (Vertex v : node.vertices) incidence_[v].push_back(id);
    nodes_.push_back(std::move(node));
    active_.push_back(1);
    return id;
  }

  bool holds(int id, Vertex v) const {
    const auto& list = incidence_[v];
    return std::find(list.begin(), list.end(), id) != list.end();
  }

  // Common vertices of two active clusters, up to two of them.
  int common(int a, int b, Vertex* first) const {
    const auto& small = nodes_[a].vertices.size() <= nodes_[b].vertices.size() ? nodes_[a] : nodes_[b];
    const int other = &small == &nodes_[a] ? b : a;
    int count = 0;
    for (Vertex v : small.vertices) {
      if (holds(other, v)) {
        if (count == 0 && first) *first = v;
        if (++count == 2) break;
      }
    }
    return count;
  }

  std::size_t start_offset(std::size_t size) {
    if (!rng_ || size == 0) return 0;
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(*rng_);
  }

  std::optional<Triple> find_triple(int a) {
    const auto& va = nodes_[a].vertices;
    const std::size_t offset_a = start_offset(va.size());
    for (std::size_t i = 0; i < va.size(); ++i) {
      const Vertex x = va[(i + offset_a) % va.size()];
      for (int b : incidence_[x]) {
        if (b == a || common(a, b, nullptr) != 1) continue;
        const auto& vb = nodes_[b].vertices;
        const std::size_t offset_b = start_offset(vb.size());
        for (std::size_t j = 0; j < vb.size(); ++j) {
          const Vertex y = vb[(j + offset_b) % vb.size()];
          if (y == x) continue;
          for (int c : incidence_[y]) {
            if (c == a || c == b || common(b, c, nullptr) != 1) continue;
            Vertex z = -1;
            if (common(c, a, &z) != 1 || z == x || z == y) continue;
            return Triple{a, b, c, x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  int merge(const Triple& t) {
    DecompositionNode node;
    const auto& va = nodes_[t.a].vertices;
    const auto& vb = nodes_[t.b].vertices;
    const auto& vc = nodes_[t.c].vertices;
    std::vector<Vertex> ab;
    std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(ab));
    std::set_union(ab.begin(), ab.end(), vc.begin(), vc.end(), std::back_inserter(node.vertices));
    node.children = {t.a, t.b, t.c};
    node.shared = {t.ab, t.bc, t.ca};
    for (int child : node.children) {
      active_[child] = 0;
      for (Vertex v : nodes_[child].vertices) {
        auto& list = incidence_[v];
        list.erase(std::find(list.begin(), list.end(), child));
      }
    }
    return add_node(std::move(node));
  }

  std::vector<DecompositionNode> nodes_;
  std::vector<char> active_;
  std::vector<std::vector<int>> incidence_;
  std::optional<std::mt19937_64> rng_;
};

void dump_node(const DecompositionTree& tree, int id, int depth, std::ostringstream& out) {
  const auto& node = tree.nodes[id];
  out << std::string(2 * depth, ' ') << '[';
  for (std::size_t i = 0; i < node.vertices.size(); ++i) {
    out << (i ? " " : "") << node.vertices[i];
  }
  out << ']';
  if (!node.is_leaf()) {
    out << " shared " << node.shared[0] << ' ' << node.shared[1] << ' ' << node.shared[2];
  }
  out << '\n';
  if (!node.is_leaf()) {
    for (int child : node.children) dump_node(tree, child, depth + 1, out);
  }
}

}  // namespace

std::string DecompositionTree::dump() const {
  std::ostringstream out;
  if (root >= 0) dump_node(*this, root, 0, out);
  return out.str();
}

ClusterSet::ClusterSet(int vertex_count, std::vector<Cluster> clusters)
    : clusters_(std::move(clusters)), incidence_(vertex_count) {
  std::sort(clusters_.begin(), clusters_.end(),
            [](const Cluster& a, const Cluster& b) { return a.vertices < b.vertices; });
  for (ClusterId c = 0; c < static_cast<ClusterId>(clusters_.size()); ++c) {
    for (Vertex v : clusters_[c].vertices) incidence_[v].push_back(c);
    for (const Edge& e : clusters_[c].edges) owner_.emplace(e, c);
  }
}

bool ClusterSet::contains(ClusterId c, Vertex v) const {
  const auto& list = incidence_[v];
  return std::binary_search(list.begin(), list.end(), c);
}

ClusterId ClusterSet::owner(const Edge& e) const {
  auto it = owner_.find(e);
  return it == owner_.end() ? -1 : it->second;
}

int ClusterSet::shared_count(ClusterId a, ClusterId b, int cap) const {
  const auto& va = clusters_[a].vertices;
  const auto& vb = clusters_[b].vertices;
  const ClusterId other = va.size() <= vb.size() ? b : a;
  int count = 0;
  for (Vertex v : va.size() <= vb.size() ? va : vb) {
    if (contains(other, v) && ++count >= cap) break;
  }
  return count;
}

std::optional<Vertex> ClusterSet::shared_vertex(ClusterId a, ClusterId b) const {
  const auto& va = clusters_[a].vertices;
  const auto& vb = clusters_[b].vertices;
  const ClusterId other = va.size() <= vb.size() ? b : a;
  for (Vertex v : va.size() <= vb.size() ? va : vb) {
    if (contains(other, v)) return v;
  }
  return std::nullopt;
}

std::optional<DecompositionTree> is_tree_decomposable(const Graph& g, const MergeOptions& options) {
  if (g.edge_count() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no edges");
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "graph is disconnected");
  ClusterMerger merger(g, options);
  merger.run();
  auto roots = merger.roots();
  if (roots.size() != 1) return std::nullopt;
  DecompositionTree tree;
  tree.nodes = std::move(merger.nodes());
  tree.root = roots.front();
  return tree;
}

ClusterSet maximal_clusters(const Graph& g, const MergeOptions& options) {
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "graph is disconnected");
  ClusterMerger merger(g, options);
  merger.run();
  std::vector<Cluster> clusters;
  for (int id : merger.roots()) {
    Cluster c;
    c.vertices = merger.nodes()[id].vertices;
    c.edges = merger.leaf_edges(id);
    clusters.push_back(std::move(c));
  }
  return ClusterSet(g.vertex_count(), std::move(clusters));
}

}  // namespace cayley
