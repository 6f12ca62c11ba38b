#pragma once

#include <string>
#include <variant>

#include "endograph/graph.hpp"
#include "endograph/group.hpp"
#include "endograph/morphism.hpp"

namespace endograph {

enum class GraphKind {
  EndoDirected,   // arc a -> b iff some endomorphism maps a to b (a != b)
  Endo,           // underlying simple graph of EndoDirected
  Auto,           // edge {a,b} iff some automorphism maps a to b (a != b)
  PowerDirected,  // arc a -> b iff b is a positive power of a (a != b)
  Power,          // underlying simple graph of PowerDirected
};

GraphKind graph_kind_from_string(const std::string& s);
std::string to_string(GraphKind k);

struct BuildOptions {
  bool delete_identity = false;
  long enum_budget = kDefaultEnumBudget;
};

struct BuiltGraph {
  AnyGraph graph;
  std::string strategy;  // arc oracle strategy, or "powers"/"automorphisms"
};

Digraph build_endo_digraph(const Group& g, const BuildOptions& opts = {});
// Same construction from a caller-supplied oracle (e.g. a forced strategy).
Digraph endo_digraph_from_oracle(const ArcOracle& oracle, int vertex_count);
SimpleGraph build_endo_graph(const Group& g, const BuildOptions& opts = {});
SimpleGraph build_auto_graph(const Group& g, const BuildOptions& opts = {});
Digraph build_power_digraph(const Group& g, const BuildOptions& opts = {});
SimpleGraph build_power_graph(const Group& g, const BuildOptions& opts = {});

// Uniform entry point; applies delete_identity and records the strategy.
// Deleted-identity graphs keep the original element ids as labels.
BuiltGraph build(const Group& g, GraphKind kind, const BuildOptions& opts = {});

// Edge count of Endo(Z_n): C(n,2) minus phi(d_i)phi(d_j) summed over
// unordered divisor pairs with d_i not dividing d_j and d_j not dividing d_i.
long cyclic_endo_edge_count_formula(long n);

// Number of maximal cliques of Endo(Z_n): multinomial
// (sum a_i)! / prod(a_i!) over the prime exponents of n.
long cyclic_endo_clique_count_formula(long n);

// Abelian p-group shapes whose Endo graph is complete: one prime, at most
// two distinct exponents, and consecutive when there are two.
bool is_completeness_shape(const AbelianShape& shape);

// Homocyclic for each prime: all factors of a given prime share one exponent.
bool is_per_prime_homocyclic(const AbelianShape& shape);

}  // namespace endograph
