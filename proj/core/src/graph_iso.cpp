#include <algorithm>
#include <map>

#include "endograph/graph.hpp"

namespace endograph {

namespace {

struct AdjView {
  int n = 0;
  const uint8_t* adj = nullptr;  // n*n

  bool at(int a, int b) const { return adj[a * n + b] != 0; }
};

// Joint color refinement: both graphs share one signature table per round so
// colors are comparable across graphs. Returns per-graph color vectors, or
// nullopt when the color multisets diverge (certain non-isomorphism).
std::optional<std::pair<std::vector<int>, std::vector<int>>> joint_refine(
    const AdjView& a, const AdjView& b) {
  int n = a.n;
  std::vector<int> ca(n, 0), cb(n, 0);
  int classes = 1;
  for (int round = 0; round < n + 1; ++round) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    auto signature = [n](const AdjView& g, const std::vector<int>& c, int v) {
      std::vector<int> outs, ins;
      for (int w = 0; w < n; ++w) {
        if (g.at(v, w)) outs.push_back(c[w]);
        if (g.at(w, v)) ins.push_back(c[w]);
      }
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      return Sig{c[v], std::move(outs), std::move(ins)};
    };
    std::map<Sig, int> ids;
    std::vector<int> na(n), nb(n);
    for (int v = 0; v < n; ++v) {
      auto s = signature(a, ca, v);
      auto it = ids.find(s);
      na[v] = it == ids.end()
                  ? ids.emplace(std::move(s), static_cast<int>(ids.size()))
                        .first->second
                  : it->second;
    }
    for (int v = 0; v < n; ++v) {
      auto s = signature(b, cb, v);
      auto it = ids.find(s);
      if (it == ids.end()) return std::nullopt;  // color unseen in a
      nb[v] = it->second;
    }
    std::vector<int> ha(ids.size(), 0), hb(ids.size(), 0);
    for (int v = 0; v < n; ++v) {
      ha[na[v]]++;
      hb[nb[v]]++;
    }
    if (ha != hb) return std::nullopt;
    ca = std::move(na);
    cb = std::move(nb);
    if (static_cast<int>(ids.size()) == classes) break;  // stable
    classes = static_cast<int>(ids.size());
  }
  return std::make_pair(std::move(ca), std::move(cb));
}

std::optional<std::vector<int>> find_iso(const AdjView& a, const AdjView& b,
                                         long arcs_a, long arcs_b) {
  if (a.n != b.n || arcs_a != arcs_b) return std::nullopt;
  int n = a.n;
  if (n > kIsoVertexCap)
    throw BudgetError("graph isomorphism: vertex cap exceeded");
  if (n == 0) return std::vector<int>{};
  auto colors = joint_refine(a, b);
  if (!colors) return std::nullopt;
  const auto& [ca, cb] = *colors;

  // Most-constrained-first vertex order: rare colors first.
  std::vector<int> freq(n + 1, 0);
  for (int v = 0; v < n; ++v) freq[ca[v]]++;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::tuple{freq[ca[x]], ca[x], x} < std::tuple{freq[ca[y]], ca[y], y};
  });

  std::vector<int> mapping(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || cb[w] != ca[v]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        int u = order[d];
        if (a.at(v, u) != b.at(w, mapping[u]) || a.at(u, v) != b.at(mapping[u], w))
          ok = false;
      }
      if (!ok) continue;
      mapping[v] = w;
      used[w] = 1;
      if (self(self, depth + 1)) return true;
      mapping[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return mapping;
}

struct MatrixCopy {
  std::vector<uint8_t> adj;
  int n;
};

MatrixCopy matrix_of(const Digraph& d) {
  int n = d.vertex_count();
  MatrixCopy m{std::vector<uint8_t>(static_cast<size_t>(n) * n, 0), n};
  for (auto [x, y] : d.arcs()) m.adj[x * n + y] = 1;
  return m;
}

MatrixCopy matrix_of(const SimpleGraph& g) {
  int n = g.vertex_count();
  MatrixCopy m{std::vector<uint8_t>(static_cast<size_t>(n) * n, 0), n};
  for (auto [x, y] : g.edges()) {
    m.adj[x * n + y] = 1;
    m.adj[y * n + x] = 1;
  }
  return m;
}

}  // namespace

std::optional<std::vector<int>> find_digraph_isomorphism(const Digraph& a,
                                                         const Digraph& b) {
  auto ma = matrix_of(a), mb = matrix_of(b);
  return find_iso({ma.n, ma.adj.data()}, {mb.n, mb.adj.data()}, a.arc_count(),
                  b.arc_count());
}

std::optional<std::vector<int>> find_graph_isomorphism(const SimpleGraph& a,
                                                       const SimpleGraph& b) {
  auto ma = matrix_of(a), mb = matrix_of(b);
  return find_iso({ma.n, ma.adj.data()}, {mb.n, mb.adj.data()}, a.edge_count(),
                  b.edge_count());
}

bool digraphs_isomorphic(const Digraph& a, const Digraph& b) {
  return find_digraph_isomorphism(a, b).has_value();
}

bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return find_graph_isomorphism(a, b).has_value();
}

}  // namespace endograph
