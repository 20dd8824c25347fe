#include "cayley/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace cayley {

bool is_planar(const Graph& g) {
  // Euler bound; also keeps Boost away from obviously dense inputs.
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n >= 3 && g.edge_count() > 3 * n - 6) return false;

  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(n);
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.w, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace cayley
