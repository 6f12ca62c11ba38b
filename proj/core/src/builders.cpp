#include "endograph/builders.hpp"

#include <algorithm>

namespace endograph {

GraphKind graph_kind_from_string(const std::string& s) {
  if (s == "endo-directed") return GraphKind::EndoDirected;
  if (s == "endo") return GraphKind::Endo;
  if (s == "auto") return GraphKind::Auto;
  if (s == "power-directed") return GraphKind::PowerDirected;
  if (s == "power") return GraphKind::Power;
  throw UsageError("unknown graph kind: " + s);
}

std::string to_string(GraphKind k) {
  switch (k) {
    case GraphKind::EndoDirected:
      return "endo-directed";
    case GraphKind::Endo:
      return "endo";
    case GraphKind::Auto:
      return "auto";
    case GraphKind::PowerDirected:
      return "power-directed";
    case GraphKind::Power:
      return "power";
  }
  return "unknown";
}

Digraph endo_digraph_from_oracle(const ArcOracle& oracle, int vertex_count) {
  Digraph d(vertex_count);
  for (ElementId a = 0; a < vertex_count; ++a)
    for (ElementId b = 0; b < vertex_count; ++b)
      if (a != b && oracle.arc(a, b)) d.add_arc(a, b);
  return d;
}

Digraph build_endo_digraph(const Group& g, const BuildOptions& opts) {
  ArcOracle oracle(g, opts.enum_budget);
  return endo_digraph_from_oracle(oracle, g.order());
}

SimpleGraph build_endo_graph(const Group& g, const BuildOptions& opts) {
  return underlying_simple_graph(build_endo_digraph(g, opts));
}

SimpleGraph build_auto_graph(const Group& g, const BuildOptions& opts) {
  auto orbits = automorphism_orbits(g, opts.enum_budget);
  if (!orbits)
    throw BudgetError("build_auto_graph: automorphism enumeration over budget");
  SimpleGraph graph(g.order());
  for (const auto& orbit : *orbits)
    for (size_t i = 0; i < orbit.size(); ++i)
      for (size_t j = i + 1; j < orbit.size(); ++j)
        graph.add_edge(orbit[i], orbit[j]);
  return graph;
}

Digraph build_power_digraph(const Group& g, const BuildOptions&) {
  int n = g.order();
  Digraph d(n);
  for (ElementId a = 0; a < n; ++a) {
    ElementId x = a;
    for (int m = 2; m <= g.element_order(a); ++m) {
      x = g.op(x, a);
      if (x != a) d.add_arc(a, x);
    }
    if (a != 0 && !d.has_arc(a, 0)) d.add_arc(a, 0);
  }
  return d;
}

SimpleGraph build_power_graph(const Group& g, const BuildOptions& opts) {
  return underlying_simple_graph(build_power_digraph(g, opts));
}

BuiltGraph build(const Group& g, GraphKind kind, const BuildOptions& opts) {
  std::string strategy;
  AnyGraph graph{Digraph(0)};
  switch (kind) {
    case GraphKind::EndoDirected:
    case GraphKind::Endo: {
      ArcOracle oracle(g, opts.enum_budget);
      strategy = std::string(oracle.strategy_name());
      Digraph d = endo_digraph_from_oracle(oracle, g.order());
      if (kind == GraphKind::Endo)
        graph = underlying_simple_graph(d);
      else
        graph = std::move(d);
      break;
    }
    case GraphKind::Auto:
      strategy = "automorphisms";
      graph = build_auto_graph(g, opts);
      break;
    case GraphKind::PowerDirected:
      strategy = "powers";
      graph = build_power_digraph(g, opts);
      break;
    case GraphKind::Power:
      strategy = "powers";
      graph = build_power_graph(g, opts);
      break;
  }
  if (opts.delete_identity) {
    if (std::holds_alternative<Digraph>(graph))
      graph = delete_vertex(std::get<Digraph>(graph), 0);
    else
      graph = delete_vertex(std::get<SimpleGraph>(graph), 0);
  }
  return BuiltGraph{std::move(graph), std::move(strategy)};
}

long cyclic_endo_edge_count_formula(long n) {
  if (n < 1) throw UsageError("cyclic_endo_edge_count_formula: n >= 1");
  auto dp = divisor_profile(n);
  long missing = 0;
  for (size_t i = 0; i < dp.divisors.size(); ++i)
    for (size_t j = i + 1; j < dp.divisors.size(); ++j) {
      long di = dp.divisors[i], dj = dp.divisors[j];
      if (dj % di != 0 && di % dj != 0) missing += dp.phi[i] * dp.phi[j];
    }
  return n * (n - 1) / 2 - missing;
}

long cyclic_endo_clique_count_formula(long n) {
  if (n < 1) throw UsageError("cyclic_endo_clique_count_formula: n >= 1");
  std::vector<int> exps;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      exps.push_back(e);
    }
  }
  if (m > 1) exps.push_back(1);
  long total = 0;
  for (int e : exps) total += e;
  long result = 1;
  // Multinomial total! / prod(e_i!) computed as a product of binomials.
  long rest = total;
  for (int e : exps) {
    // result *= C(rest, e)
    long c = 1;
    for (int i = 1; i <= e; ++i) c = c * (rest - e + i) / i;
    result *= c;
    rest -= e;
  }
  return result;
}

bool is_completeness_shape(const AbelianShape& shape) {
  if (shape.factors.empty()) return true;  // trivial group, K1
  long prime = shape.factors[0].prime;
  for (const auto& f : shape.factors)
    if (f.prime != prime) return false;
  if (shape.factors.size() == 1) return true;
  if (shape.factors.size() != 2) return false;
  return shape.factors[1].exponent == shape.factors[0].exponent + 1;
}

bool is_per_prime_homocyclic(const AbelianShape& shape) {
  for (size_t i = 1; i < shape.factors.size(); ++i)
    if (shape.factors[i].prime == shape.factors[i - 1].prime) return false;
  return true;
}

}  // namespace endograph
