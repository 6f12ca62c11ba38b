#include <algorithm>

#include "endograph/graph.hpp"

namespace endograph {

namespace {

// Bron-Kerbosch with pivoting over vector-based vertex sets. Sizes here are
// small (hundreds of vertices at most), so set intersections stay linear.
struct BronKerbosch {
  const SimpleGraph& g;
  long limit;
  std::vector<std::vector<int>> cliques;
  std::vector<int> current;

  void run(std::vector<int> p, std::vector<int> x) {
    if (p.empty() && x.empty()) {
      if (static_cast<long>(cliques.size()) >= limit)
        throw BudgetError("maximal_cliques: clique limit exceeded");
      cliques.push_back(current);
      return;
    }
    // Pivot: vertex of P ∪ X with the most neighbors in P.
    int pivot = -1;
    size_t best = 0;
    auto consider = [&](int u) {
      size_t cnt = 0;
      for (int v : p)
        if (g.has_edge(u, v)) ++cnt;
      if (pivot < 0 || cnt > best) {
        pivot = u;
        best = cnt;
      }
    };
    for (int u : p) consider(u);
    for (int u : x) consider(u);

    std::vector<int> expand;
    for (int v : p)
      if (!g.has_edge(pivot, v)) expand.push_back(v);
    for (int v : expand) {
      std::vector<int> np, nx;
      for (int w : p)
        if (g.has_edge(v, w)) np.push_back(w);
      for (int w : x)
        if (g.has_edge(v, w)) nx.push_back(w);
      current.push_back(v);
      run(std::move(np), std::move(nx));
      current.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g, long limit) {
  if (g.vertex_count() == 0) return {};
  BronKerbosch bk{g, limit, {}, {}};
  std::vector<int> p(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) p[i] = i;
  bk.run(std::move(p), {});
  for (auto& c : bk.cliques) std::sort(c.begin(), c.end());
  std::sort(bk.cliques.begin(), bk.cliques.end());
  return bk.cliques;
}

long maximal_clique_count(const SimpleGraph& g, long limit) {
  return static_cast<long>(maximal_cliques(g, limit).size());
}

}  // namespace endograph
