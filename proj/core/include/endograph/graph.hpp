#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "endograph/errors.hpp"

namespace endograph {

inline constexpr int kVertexCap = 4096;
inline constexpr int kIsoVertexCap = 32;
inline constexpr int kHamiltonVertexCap = 32;
inline constexpr long kCliqueLimit = 100'000;

// Loop-free digraph over vertices 0..n-1 with optional display labels.
class Digraph {
 public:
  explicit Digraph(int n = 0);

  int vertex_count() const { return n_; }
  long arc_count() const { return arcs_; }
  bool has_arc(int a, int b) const { return adj_[a * n_ + b] != 0; }
  void add_arc(int a, int b);
  const std::vector<int>& out_neighbors(int a) const { return out_[a]; }
  const std::vector<int>& in_neighbors(int a) const { return in_[a]; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  bool has_labels() const { return !labels_.empty(); }

  // Sorted (a, b) pairs.
  std::vector<std::pair<int, int>> arcs() const;

  bool operator==(const Digraph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

 private:
  int n_;
  long arcs_ = 0;
  std::vector<uint8_t> adj_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<std::string> labels_;
};

// Simple undirected graph, no loops or multi-edges.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);

  int vertex_count() const { return n_; }
  long edge_count() const { return edges_; }
  bool has_edge(int a, int b) const { return adj_[a * n_ + b] != 0; }
  void add_edge(int a, int b);
  const std::vector<int>& neighbors(int a) const { return nbr_[a]; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  bool has_labels() const { return !labels_.empty(); }

  // Sorted (a, b) pairs with a < b.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const SimpleGraph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

 private:
  int n_;
  long edges_ = 0;
  std::vector<uint8_t> adj_;
  std::vector<std::vector<int>> nbr_;
  std::vector<std::string> labels_;
};

using AnyGraph = std::variant<Digraph, SimpleGraph>;

// Arc a->b or b->a collapses to edge {a,b}; loops are already absent.
SimpleGraph underlying_simple_graph(const Digraph& d);

// Removes one vertex, shifting ids down; labels follow (defaulting to the
// original vertex ids when the input is unlabeled).
Digraph delete_vertex(const Digraph& d, int v);
SimpleGraph delete_vertex(const SimpleGraph& g, int v);

// --- undirected structure ---

bool is_connected(const SimpleGraph& g);  // vacuously true for n <= 1
// Shortest cycle length; nullopt when the graph is acyclic.
std::optional<int> girth(const SimpleGraph& g);
// Two-colorability with two NON-empty parts: K1 is not bipartite here.
bool is_bipartite(const SimpleGraph& g);
bool is_tree(const SimpleGraph& g);
bool is_complete(const SimpleGraph& g);
// Boyer-Myrvold planarity.
bool is_planar(const SimpleGraph& g);
// Bron-Kerbosch with pivoting; each clique sorted, cliques sorted
// lexicographically. Throws BudgetError beyond `limit` cliques.
std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g,
                                              long limit = kCliqueLimit);
long maximal_clique_count(const SimpleGraph& g, long limit = kCliqueLimit);
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

// --- directed structure ---

// Strongly connected components in Tarjan order, then sorted by least
// vertex; each component sorted.
std::vector<std::vector<int>> strongly_connected_components(const Digraph& d);
bool is_strongly_connected(const Digraph& d);  // true for n <= 1

struct Condensation {
  std::vector<std::vector<int>> components;  // sorted by least vertex
  std::vector<int> component_of;             // vertex -> component index
  Digraph dag;                               // one vertex per component
};
Condensation condensation(const Digraph& d);

// One least vertex from each source component of the condensation; this is
// a minimum point basis (a vertex set of minimum size from which every
// vertex is reachable).
std::vector<int> minimum_point_basis(const Digraph& d);
bool has_single_point_basis(const Digraph& d);

bool is_complete_digraph(const Digraph& d);  // all ordered pairs, no loops
// Exact backtracking with reachability pruning; vertex cap applies.
bool has_hamiltonian_cycle(const Digraph& d);

// --- isomorphism ---

// Color-refinement signatures plus backtracking; exact for both inputs
// within kIsoVertexCap vertices (throws BudgetError above the cap).
bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b);
bool digraphs_isomorphic(const Digraph& a, const Digraph& b);
std::optional<std::vector<int>> find_digraph_isomorphism(const Digraph& a,
                                                         const Digraph& b);
std::optional<std::vector<int>> find_graph_isomorphism(const SimpleGraph& a,
                                                       const SimpleGraph& b);

// --- serialization ---

// {"vertices": n, "directed": bool, "arcs"|"edges": [[a,b],...],
//  "labels": [...] (optional)} with sorted pair lists.
nlohmann::json graph_to_json(const Digraph& d);
nlohmann::json graph_to_json(const SimpleGraph& g);
AnyGraph graph_from_json(const nlohmann::json& j);

std::string graph_to_dot(const Digraph& d, const std::string& name = "G");
std::string graph_to_dot(const SimpleGraph& g, const std::string& name = "G");

}  // namespace endograph
