#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "endograph/graph.hpp"

namespace endograph {

bool is_planar(const SimpleGraph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::property<boost::vertex_index_t, int>>;
  BoostGraph bg(g.vertex_count());
  for (auto [a, b] : g.edges()) boost::add_edge(a, b, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace endograph
