#include "endograph/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace endograph {

Digraph::Digraph(int n) : n_(n) {
  if (n < 0 || n > kVertexCap) throw SizeCapError("Digraph: vertex count out of range");
  adj_.assign(static_cast<size_t>(n) * n, 0);
  out_.resize(n);
  in_.resize(n);
}

void Digraph::add_arc(int a, int b) {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    throw UsageError("add_arc: vertex out of range");
  if (a == b) throw UsageError("add_arc: loops not supported");
  if (adj_[a * n_ + b]) return;
  adj_[a * n_ + b] = 1;
  out_[a].push_back(b);
  in_[b].push_back(a);
  ++arcs_;
}

void Digraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<size_t>(n_))
    throw UsageError("set_labels: size mismatch");
  labels_ = std::move(labels);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(arcs_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (adj_[a * n_ + b]) out.push_back({a, b});
  return out;
}

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0 || n > kVertexCap)
    throw SizeCapError("SimpleGraph: vertex count out of range");
  adj_.assign(static_cast<size_t>(n) * n, 0);
  nbr_.resize(n);
}

void SimpleGraph::add_edge(int a, int b) {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    throw UsageError("add_edge: vertex out of range");
  if (a == b) throw UsageError("add_edge: loops not supported");
  if (adj_[a * n_ + b]) return;
  adj_[a * n_ + b] = 1;
  adj_[b * n_ + a] = 1;
  nbr_[a].push_back(b);
  nbr_[b].push_back(a);
  ++edges_;
}

void SimpleGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<size_t>(n_))
    throw UsageError("set_labels: size mismatch");
  labels_ = std::move(labels);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_);
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (adj_[a * n_ + b]) out.push_back({a, b});
  return out;
}

SimpleGraph underlying_simple_graph(const Digraph& d) {
  SimpleGraph g(d.vertex_count());
  for (auto [a, b] : d.arcs()) g.add_edge(a, b);
  if (d.has_labels()) g.set_labels(d.labels());
  return g;
}

namespace {

std::vector<std::string> carried_labels(const std::vector<std::string>& labels,
                                        int n, int v) {
  std::vector<std::string> out;
  out.reserve(n - 1);
  for (int i = 0; i < n; ++i) {
    if (i == v) continue;
    out.push_back(labels.empty() ? std::to_string(i) : labels[i]);
  }
  return out;
}

}  // namespace

Digraph delete_vertex(const Digraph& d, int v) {
  int n = d.vertex_count();
  if (v < 0 || v >= n) throw UsageError("delete_vertex: vertex out of range");
  Digraph out(n - 1);
  auto shift = [v](int x) { return x < v ? x : x - 1; };
  for (auto [a, b] : d.arcs())
    if (a != v && b != v) out.add_arc(shift(a), shift(b));
  out.set_labels(carried_labels(d.labels(), n, v));
  return out;
}

SimpleGraph delete_vertex(const SimpleGraph& g, int v) {
  int n = g.vertex_count();
  if (v < 0 || v >= n) throw UsageError("delete_vertex: vertex out of range");
  SimpleGraph out(n - 1);
  auto shift = [v](int x) { return x < v ? x : x - 1; };
  for (auto [a, b] : g.edges())
    if (a != v && b != v) out.add_edge(shift(a), shift(b));
  out.set_labels(carried_labels(g.labels(), n, v));
  return out;
}

bool is_connected(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        queue.push_back(w);
      }
  }
  return count == n;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<int> girth(const SimpleGraph& g) {
  int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u] && u < w) {
          // Non-tree edge: cycle through s of length dist[u] + dist[w] + 1.
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool is_bipartite(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n < 2) return false;  // two non-empty parts required
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_tree(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n == 0) return false;
  return is_connected(g) && g.edge_count() == n - 1;
}

bool is_complete(const SimpleGraph& g) {
  long n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

namespace {

void tarjan_scc(const Digraph& d, int v, std::vector<int>& index,
                std::vector<int>& low, std::vector<int>& comp,
                std::vector<int>& stack, std::vector<char>& on_stack,
                int& next_index, std::vector<std::vector<int>>& comps) {
  index[v] = low[v] = next_index++;
  stack.push_back(v);
  on_stack[v] = 1;
  for (int w : d.out_neighbors(v)) {
    if (index[w] < 0) {
      tarjan_scc(d, w, index, low, comp, stack, on_stack, next_index, comps);
      low[v] = std::min(low[v], low[w]);
    } else if (on_stack[w]) {
      low[v] = std::min(low[v], index[w]);
    }
  }
  if (low[v] == index[v]) {
    std::vector<int> c;
    int w;
    do {
      w = stack.back();
      stack.pop_back();
      on_stack[w] = 0;
      comp[w] = static_cast<int>(comps.size());
      c.push_back(w);
    } while (w != v);
    std::sort(c.begin(), c.end());
    comps.push_back(std::move(c));
  }
}

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::vector<int>> comps;
  int next_index = 0;
  for (int v = 0; v < n; ++v)
    if (index[v] < 0)
      tarjan_scc(d, v, index, low, comp, stack, on_stack, next_index, comps);
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return comps;
}

bool is_strongly_connected(const Digraph& d) {
  int n = d.vertex_count();
  if (n <= 1) return true;
  auto reaches_all = [n](const Digraph& g, bool forward) {
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      const auto& nbrs = forward ? g.out_neighbors(u) : g.in_neighbors(u);
      for (int w : nbrs)
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          queue.push_back(w);
        }
    }
    return count == n;
  };
  return reaches_all(d, true) && reaches_all(d, false);
}

Condensation condensation(const Digraph& d) {
  Condensation c;
  c.components = strongly_connected_components(d);
  c.component_of.assign(d.vertex_count(), -1);
  for (size_t i = 0; i < c.components.size(); ++i)
    for (int v : c.components[i]) c.component_of[v] = static_cast<int>(i);
  c.dag = Digraph(static_cast<int>(c.components.size()));
  for (auto [a, b] : d.arcs()) {
    int ca = c.component_of[a], cb = c.component_of[b];
    if (ca != cb && !c.dag.has_arc(ca, cb)) c.dag.add_arc(ca, cb);
  }
  return c;
}

std::vector<int> minimum_point_basis(const Digraph& d) {
  auto c = condensation(d);
  std::vector<int> basis;
  for (size_t i = 0; i < c.components.size(); ++i)
    if (c.dag.in_neighbors(static_cast<int>(i)).empty())
      basis.push_back(c.components[i][0]);
  std::sort(basis.begin(), basis.end());
  return basis;
}

bool has_single_point_basis(const Digraph& d) {
  if (d.vertex_count() == 0) return false;
  return minimum_point_basis(d).size() == 1;
}

bool is_complete_digraph(const Digraph& d) {
  long n = d.vertex_count();
  return d.arc_count() == n * (n - 1);
}

bool has_hamiltonian_cycle(const Digraph& d) {
  int n = d.vertex_count();
  if (n > kHamiltonVertexCap)
    throw BudgetError("has_hamiltonian_cycle: vertex cap exceeded");
  if (n < 2) return false;
  if (!is_strongly_connected(d)) return false;
  std::vector<uint64_t> out_mask(n, 0), in_mask(n, 0);
  for (auto [a, b] : d.arcs()) {
    out_mask[a] |= uint64_t{1} << b;
    in_mask[b] |= uint64_t{1} << a;
  }
  const uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  // Path always starts at 0; remaining = unvisited vertices.
  auto rec = [&](auto&& self, int cur, uint64_t remaining) -> bool {
    if (remaining == 0) return (out_mask[cur] & 1) != 0;  // close at 0
    uint64_t rem = remaining;
    while (rem) {
      int w = std::countr_zero(rem);
      rem &= rem - 1;
      // w must be enterable from remaining+cur and leavable into
      // remaining+start.
      if (!(in_mask[w] & (remaining | (uint64_t{1} << cur)))) return false;
      if (!(out_mask[w] & ((remaining & ~(uint64_t{1} << w)) | 1))) return false;
    }
    uint64_t next = out_mask[cur] & remaining;
    while (next) {
      int w = std::countr_zero(next);
      next &= next - 1;
      if (self(self, w, remaining & ~(uint64_t{1} << w))) return true;
    }
    return false;
  };
  return rec(rec, 0, all & ~uint64_t{1});
}

nlohmann::json graph_to_json(const Digraph& d) {
  nlohmann::json arcs = nlohmann::json::array();
  for (auto [a, b] : d.arcs()) arcs.push_back({a, b});
  nlohmann::json j{{"vertices", d.vertex_count()},
                   {"directed", true},
                   {"arcs", std::move(arcs)}};
  if (d.has_labels()) j["labels"] = d.labels();
  return j;
}

nlohmann::json graph_to_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  nlohmann::json j{{"vertices", g.vertex_count()},
                   {"directed", false},
                   {"edges", std::move(edges)}};
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

namespace {

std::vector<std::string> labels_from_json(const nlohmann::json& j, int n) {
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != static_cast<size_t>(n))
      throw UsageError("graph_from_json: labels must list every vertex");
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  }
  return labels;
}

std::pair<int, int> pair_from_json(const nlohmann::json& e, int n) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
      !e[1].is_number_integer())
    throw UsageError("graph_from_json: pair entries must be [int, int]");
  int a = e[0].get<int>(), b = e[1].get<int>();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw UsageError("graph_from_json: vertex out of range");
  return {a, b};
}

}  // namespace

AnyGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("directed"))
    throw UsageError("graph_from_json: vertices and directed are required");
  if (!j["vertices"].is_number_integer() || !j["directed"].is_boolean())
    throw UsageError("graph_from_json: malformed vertices/directed");
  int n = j["vertices"].get<int>();
  if (n < 0 || n > kVertexCap)
    throw UsageError("graph_from_json: vertex count out of range");
  if (j["directed"].get<bool>()) {
    Digraph d(n);
    for (const auto& e : j.value("arcs", nlohmann::json::array())) {
      auto [a, b] = pair_from_json(e, n);
      if (a == b) throw UsageError("graph_from_json: loops not supported");
      d.add_arc(a, b);
    }
    d.set_labels(labels_from_json(j, n));
    return d;
  }
  SimpleGraph g(n);
  for (const auto& e : j.value("edges", nlohmann::json::array())) {
    auto [a, b] = pair_from_json(e, n);
    if (a == b) throw UsageError("graph_from_json: loops not supported");
    g.add_edge(a, b);
  }
  g.set_labels(labels_from_json(j, n));
  return g;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string graph_to_dot(const Digraph& d, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v < d.vertex_count(); ++v) {
    os << "  " << v;
    if (d.has_labels()) os << " [label=\"" << dot_escape(d.labels()[v]) << "\"]";
    os << ";\n";
  }
  for (auto [a, b] : d.arcs()) os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_dot(const SimpleGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (g.has_labels()) os << " [label=\"" << dot_escape(g.labels()[v]) << "\"]";
    os << ";\n";
  }
  for (auto [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace endograph
