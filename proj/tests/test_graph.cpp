#include <doctest.h>

#include "endograph/graph.hpp"

using namespace endograph;

namespace {

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph complete_bipartite(int m, int n) {
  SimpleGraph g(m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
  return g;
}

SimpleGraph petersen() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);        // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);              // spokes
  }
  return g;
}

}  // namespace

TEST_CASE("graph construction rules") {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // idempotent
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), UsageError);
  CHECK_THROWS_AS(g.add_edge(0, 3), UsageError);

  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(0, 1);
  CHECK(d.arc_count() == 1);
  CHECK_FALSE(d.has_arc(1, 0));
  CHECK_THROWS_AS(d.add_arc(2, 2), UsageError);
}

TEST_CASE("girth") {
  CHECK(girth(complete_graph(3)) == 3);
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(cycle_graph(5)) == 5);
  CHECK(girth(cycle_graph(8)) == 8);
  CHECK(girth(petersen()) == 5);
  CHECK(girth(complete_bipartite(2, 3)) == 4);
  CHECK_FALSE(girth(path_graph(6)).has_value());
  CHECK_FALSE(girth(SimpleGraph(1)).has_value());
  // Two triangles sharing no vertex, connected by a long path.
  SimpleGraph g(9);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  g.add_edge(6, 7);
  g.add_edge(7, 8);
  g.add_edge(8, 6);
  CHECK(girth(g) == 3);
}

TEST_CASE("bipartite needs two non-empty parts") {
  CHECK_FALSE(is_bipartite(SimpleGraph(1)));  // K1 has one empty part
  CHECK_FALSE(is_bipartite(SimpleGraph(0)));
  CHECK(is_bipartite(complete_graph(2)));
  CHECK(is_bipartite(cycle_graph(4)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_bipartite(path_graph(5)));
  CHECK(is_bipartite(complete_bipartite(3, 4)));
  CHECK_FALSE(is_bipartite(complete_graph(3)));
  CHECK(is_bipartite(SimpleGraph(2)));  // edgeless but two-partitionable
}

TEST_CASE("trees and connectivity") {
  CHECK(is_tree(path_graph(5)));
  CHECK(is_tree(SimpleGraph(1)));
  CHECK_FALSE(is_tree(SimpleGraph(0)));
  CHECK_FALSE(is_tree(cycle_graph(4)));
  CHECK_FALSE(is_tree(SimpleGraph(2)));  // disconnected
  CHECK(is_connected(path_graph(4)));
  CHECK(is_connected(SimpleGraph(1)));
  CHECK(is_connected(SimpleGraph(0)));
  CHECK_FALSE(is_connected(SimpleGraph(2)));

  SimpleGraph star(5);
  for (int i = 1; i < 5; ++i) star.add_edge(0, i);
  CHECK(is_tree(star));

  auto comps = connected_components(complete_bipartite(1, 2));
  CHECK(comps.size() == 1);
  SimpleGraph two_islands(5);
  two_islands.add_edge(0, 1);
  two_islands.add_edge(2, 3);
  auto islands = connected_components(two_islands);
  CHECK(islands == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4}});
}

TEST_CASE("completeness") {
  CHECK(is_complete(complete_graph(1)));
  CHECK(is_complete(complete_graph(5)));
  CHECK_FALSE(is_complete(cycle_graph(4)));
}

TEST_CASE("planarity pins") {
  CHECK(is_planar(complete_graph(4)));
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
  CHECK(is_planar(complete_bipartite(2, 100)));
  CHECK_FALSE(is_planar(petersen()));
  CHECK(is_planar(cycle_graph(6)));
  CHECK(is_planar(SimpleGraph(0)));
  // K5 and K3,3 minus one edge are both planar (edge-minimal obstructions).
  SimpleGraph k5 = complete_graph(5);
  SimpleGraph k5minus(5);
  for (auto [a, b] : k5.edges())
    if (!(a == 0 && b == 1)) k5minus.add_edge(a, b);
  CHECK(is_planar(k5minus));
}

TEST_CASE("maximal cliques") {
  auto k4 = maximal_cliques(complete_graph(4));
  CHECK(k4 == std::vector<std::vector<int>>{{0, 1, 2, 3}});

  SimpleGraph star(4);
  for (int i = 1; i < 4; ++i) star.add_edge(0, i);
  auto cliques = maximal_cliques(star);
  CHECK(cliques == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}});

  CHECK(maximal_cliques(SimpleGraph(0)).empty());
  auto isolated = maximal_cliques(SimpleGraph(2));
  CHECK(isolated == std::vector<std::vector<int>>{{0}, {1}});

  // Two triangles glued on an edge.
  SimpleGraph glued(4);
  glued.add_edge(0, 1);
  glued.add_edge(0, 2);
  glued.add_edge(1, 2);
  glued.add_edge(1, 3);
  glued.add_edge(2, 3);
  CHECK(maximal_cliques(glued) ==
        std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}});
  CHECK(maximal_clique_count(glued) == 2);

  CHECK_THROWS_AS(maximal_cliques(complete_bipartite(4, 4), 10), BudgetError);
}

TEST_CASE("strongly connected components") {
  Digraph cycle(4);
  for (int i = 0; i < 4; ++i) cycle.add_arc(i, (i + 1) % 4);
  CHECK(strongly_connected_components(cycle) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(is_strongly_connected(cycle));

  Digraph path(3);
  path.add_arc(0, 1);
  path.add_arc(1, 2);
  CHECK(strongly_connected_components(path) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK_FALSE(is_strongly_connected(path));
  CHECK(minimum_point_basis(path) == std::vector<int>{0});
  CHECK(has_single_point_basis(path));

  CHECK(is_strongly_connected(Digraph(1)));
  CHECK(is_strongly_connected(Digraph(0)));
  CHECK_FALSE(has_single_point_basis(Digraph(0)));

  // Two 2-cycles joined by one arc: one source component.
  Digraph two(4);
  two.add_arc(0, 1);
  two.add_arc(1, 0);
  two.add_arc(2, 3);
  two.add_arc(3, 2);
  two.add_arc(1, 2);
  auto cond = condensation(two);
  CHECK(cond.components ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(cond.dag.vertex_count() == 2);
  CHECK(cond.dag.has_arc(0, 1));
  CHECK(minimum_point_basis(two) == std::vector<int>{0});

  // Two independent cycles: basis needs both.
  Digraph split(4);
  split.add_arc(0, 1);
  split.add_arc(1, 0);
  split.add_arc(2, 3);
  split.add_arc(3, 2);
  CHECK(minimum_point_basis(split) == std::vector<int>{0, 2});
  CHECK_FALSE(has_single_point_basis(split));
}

TEST_CASE("complete digraphs and hamiltonian cycles") {
  Digraph k3(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) k3.add_arc(a, b);
  CHECK(is_complete_digraph(k3));
  CHECK(has_hamiltonian_cycle(k3));

  Digraph cycle(5);
  for (int i = 0; i < 5; ++i) cycle.add_arc(i, (i + 1) % 5);
  CHECK_FALSE(is_complete_digraph(cycle));
  CHECK(has_hamiltonian_cycle(cycle));

  Digraph path(4);
  for (int i = 0; i < 3; ++i) path.add_arc(i, i + 1);
  CHECK_FALSE(has_hamiltonian_cycle(path));

  CHECK_FALSE(has_hamiltonian_cycle(Digraph(1)));
  CHECK_FALSE(has_hamiltonian_cycle(Digraph(0)));

  // Strongly connected but not hamiltonian: a bowtie through vertex 0.
  Digraph bowtie(5);
  bowtie.add_arc(0, 1);
  bowtie.add_arc(1, 2);
  bowtie.add_arc(2, 0);
  bowtie.add_arc(0, 3);
  bowtie.add_arc(3, 4);
  bowtie.add_arc(4, 0);
  CHECK(is_strongly_connected(bowtie));
  CHECK_FALSE(has_hamiltonian_cycle(bowtie));
}

TEST_CASE("graph isomorphism") {
  CHECK(graphs_isomorphic(cycle_graph(5), cycle_graph(5)));
  // C5 is self-complementary.
  SimpleGraph c5 = cycle_graph(5);
  SimpleGraph comp(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!c5.has_edge(i, j)) comp.add_edge(i, j);
  CHECK(graphs_isomorphic(c5, comp));

  // C6 and two triangles: same vertex and edge counts, different girth.
  SimpleGraph triangles(6);
  triangles.add_edge(0, 1);
  triangles.add_edge(1, 2);
  triangles.add_edge(2, 0);
  triangles.add_edge(3, 4);
  triangles.add_edge(4, 5);
  triangles.add_edge(5, 3);
  CHECK_FALSE(graphs_isomorphic(cycle_graph(6), triangles));

  auto mapping = find_graph_isomorphism(petersen(), petersen());
  REQUIRE(mapping.has_value());

  CHECK_THROWS_AS(graphs_isomorphic(cycle_graph(33), cycle_graph(33)),
                  BudgetError);
}

TEST_CASE("digraph isomorphism distinguishes orientation structure") {
  Digraph c3(3), c3r(3);
  for (int i = 0; i < 3; ++i) {
    c3.add_arc(i, (i + 1) % 3);
    c3r.add_arc((i + 1) % 3, i);
  }
  CHECK(digraphs_isomorphic(c3, c3r));

  // A transitive tournament and a directed cycle on 3 vertices.
  Digraph tour(3);
  tour.add_arc(0, 1);
  tour.add_arc(0, 2);
  tour.add_arc(1, 2);
  CHECK_FALSE(digraphs_isomorphic(c3, tour));

  auto mapping = find_digraph_isomorphism(c3, c3r);
  REQUIRE(mapping.has_value());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (c3.has_arc(a, b))
        CHECK(c3r.has_arc((*mapping)[a], (*mapping)[b]));
}

TEST_CASE("vertex deletion keeps original identities as labels") {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  d.add_arc(2, 0);
  auto cut = delete_vertex(d, 0);
  CHECK(cut.vertex_count() == 2);
  CHECK(cut.has_arc(0, 1));  // old 1 -> 2
  CHECK_FALSE(cut.has_arc(1, 0));
  CHECK(cut.labels() == std::vector<std::string>{"1", "2"});

  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.set_labels({"e", "a", "b", "c"});
  auto h = delete_vertex(g, 1);
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 1);
  CHECK(h.labels() == std::vector<std::string>{"e", "b", "c"});
}

TEST_CASE("underlying simple graph") {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  d.add_arc(1, 2);
  auto g = underlying_simple_graph(d);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("json round trips") {
  Digraph d(3);
  d.add_arc(0, 2);
  d.add_arc(2, 1);
  d.set_labels({"x", "y", "z"});
  auto jd = graph_to_json(d);
  CHECK(jd["directed"] == true);
  CHECK(jd["vertices"] == 3);
  auto back = graph_from_json(jd);
  REQUIRE(std::holds_alternative<Digraph>(back));
  CHECK(std::get<Digraph>(back) == d);
  CHECK(std::get<Digraph>(back).labels() == d.labels());

  SimpleGraph g(4);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  auto jg = graph_to_json(g);
  CHECK(jg["directed"] == false);
  CHECK(jg["edges"].size() == 2);
  auto gback = graph_from_json(jg);
  REQUIRE(std::holds_alternative<SimpleGraph>(gback));
  CHECK(std::get<SimpleGraph>(gback) == g);

  CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"vertices", 2}}),
                  UsageError);
}

TEST_CASE("dot export") {
  SimpleGraph g(3);
  g.add_edge(0, 2);
  g.set_labels({"e", "a\"b", "c\\d"});
  auto dot = graph_to_dot(g, "demo");
  CHECK(dot.find("graph demo {") == 0);
  CHECK(dot.find("0 [label=\"e\"];") != std::string::npos);
  CHECK(dot.find("1 [label=\"a\\\"b\"];") != std::string::npos);
  CHECK(dot.find("2 [label=\"c\\\\d\"];") != std::string::npos);
  CHECK(dot.find("0 -- 2;") != std::string::npos);

  Digraph d(2);
  d.add_arc(1, 0);
  auto ddot = graph_to_dot(d);
  CHECK(ddot.find("digraph G {") == 0);
  CHECK(ddot.find("1 -> 0;") != std::string::npos);
}
