#include "endograph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "endograph/catalog.hpp"

namespace endograph {

namespace {

long parse_positive(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    long value = std::stol(text, &used);
    if (used != text.size() || value < 1) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError(what + ": expected a positive integer, got '" + text +
                     "'");
  }
}

std::vector<long> parse_abelian_factors(const std::string& text) {
  std::vector<long> factors;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, 'x')) {
    if (token.empty())
      throw UsageError("abelian selector: empty factor in '" + text + "'");
    auto caret = token.find('^');
    if (caret == std::string::npos) {
      factors.push_back(parse_positive(token, "abelian selector"));
      continue;
    }
    long base = parse_positive(token.substr(0, caret), "abelian selector");
    long exp = parse_positive(token.substr(caret + 1), "abelian selector");
    long value = 1;
    for (long i = 0; i < exp; ++i) {
      if (value > kDefaultOrderCap) break;  // cap check happens in make_abelian
      value *= base;
    }
    factors.push_back(value);
  }
  if (factors.empty())
    throw UsageError("abelian selector: no factors in '" + text + "'");
  return factors;
}

std::ostream& sink(const std::string& path, std::ofstream& file,
                   std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  return file;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SizeCapError& e) {
    err << "size cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

std::vector<std::string> coordinate_labels(const Group& g) {
  std::vector<std::string> labels;
  auto factors = g.cyclic_factors();
  for (ElementId x = 0; x < g.order(); ++x) {
    if (!factors) {
      labels.push_back(std::to_string(x));
      continue;
    }
    auto coords = g.coordinates(x);
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords[i]);
    }
    s += ")";
    labels.push_back(std::move(s));
  }
  return labels;
}

struct PreparedGraph {
  Group group;
  GraphKind kind;
  AnyGraph graph;
  std::string strategy;
};

PreparedGraph prepare(const std::string& selector, const std::string& kind_name,
                      bool delete_identity, bool labels, long budget) {
  Group g = group_from_selector(selector);
  GraphKind kind = graph_kind_from_string(kind_name);
  BuildOptions opts;
  opts.enum_budget = budget;
  auto built = build(g, kind, opts);
  if (labels) {
    auto names = coordinate_labels(g);
    std::visit([&](auto& graph) { graph.set_labels(names); }, built.graph);
  }
  if (delete_identity)
    built.graph = std::visit(
        [](const auto& graph) { return AnyGraph(delete_vertex(graph, 0)); },
        built.graph);
  return {std::move(g), kind, std::move(built.graph),
          std::move(built.strategy)};
}

void write_text_graph(const AnyGraph& any, std::ostream& os) {
  if (const auto* d = std::get_if<Digraph>(&any)) {
    os << "digraph vertices=" << d->vertex_count() << " arcs=" << d->arc_count()
       << "\n";
    for (auto [a, b] : d->arcs()) os << a << " -> " << b << "\n";
  } else {
    const auto& g = std::get<SimpleGraph>(any);
    os << "graph vertices=" << g.vertex_count() << " edges=" << g.edge_count()
       << "\n";
    for (auto [a, b] : g.edges()) os << a << " -- " << b << "\n";
  }
}

nlohmann::json group_json(const Group& g) {
  auto j = descriptor_to_json(g.descriptor());
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  return j;
}

}  // namespace

Group group_from_selector(const std::string& selector) {
  auto colon = selector.find(':');
  std::string family = selector.substr(0, colon);
  std::string params =
      colon == std::string::npos ? "" : selector.substr(colon + 1);
  if (family == "cyclic")
    return make_cyclic(parse_positive(params, "cyclic selector"));
  if (family == "abelian") return make_abelian(parse_abelian_factors(params));
  if (family == "quaternion") {
    if (!params.empty())
      throw UsageError("quaternion selector takes no parameters");
    return make_quaternion();
  }
  if (family == "dihedral")
    return make_dihedral(
        static_cast<int>(parse_positive(params, "dihedral selector")));
  if (family == "symmetric")
    return make_symmetric(
        static_cast<int>(parse_positive(params, "symmetric selector")));
  if (family == "alternating") {
    if (parse_positive(params, "alternating selector") != 4)
      throw UsageError("alternating selector: only alternating:4 is built in");
    return make_alternating4();
  }
  if (family == "dicyclic") {
    if (parse_positive(params, "dicyclic selector") != 3)
      throw UsageError("dicyclic selector: only dicyclic:3 is built in");
    return make_dicyclic3();
  }
  if (family == "catalog")
    throw UsageError(
        "catalog:N names a fleet, not one group; use list-groups or the "
        "verify/hunt commands");
  throw UsageError("unknown group selector '" + selector + "'");
}

int run_build(const BuildCommand& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    auto prepared = prepare(cmd.selector, cmd.kind, cmd.delete_identity,
                            cmd.labels, cmd.enum_budget);
    std::ofstream file;
    std::ostream& os = sink(cmd.out, file, out);
    if (cmd.format == "dot") {
      std::visit(
          [&](const auto& g) { os << graph_to_dot(g, "endograph"); },
          prepared.graph);
    } else if (cmd.format == "json") {
      nlohmann::json j = std::visit(
          [](const auto& g) { return graph_to_json(g); }, prepared.graph);
      j["group"] = group_json(prepared.group);
      j["kind"] = to_string(prepared.kind);
      j["strategy"] = prepared.strategy;
      os << j.dump(2) << "\n";
    } else if (cmd.format == "text") {
      write_text_graph(prepared.graph, os);
    } else {
      throw UsageError("build: format must be dot, json or text");
    }
    return 0;
  });
}

int run_analyze(const AnalyzeCommand& cmd, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&]() {
    auto prepared = prepare(cmd.selector, cmd.kind, cmd.delete_identity,
                            false, cmd.enum_budget);
    const Group& g = prepared.group;
    bool directed = std::holds_alternative<Digraph>(prepared.graph);
    nlohmann::json j;
    j["group"] = group_json(g);
    j["kind"] = to_string(prepared.kind);
    j["delete_identity"] = cmd.delete_identity;
    j["strategy"] = prepared.strategy;
    j["directed"] = directed;
    if (directed) {
      const auto& d = std::get<Digraph>(prepared.graph);
      j["vertices"] = d.vertex_count();
      j["arcs"] = d.arc_count();
      j["strongly_connected"] = is_strongly_connected(d);
      auto basis = minimum_point_basis(d);
      j["single_point_basis"] = has_single_point_basis(d);
      j["minimum_point_basis"] = basis;
    } else {
      const auto& s = std::get<SimpleGraph>(prepared.graph);
      j["vertices"] = s.vertex_count();
      j["edges"] = s.edge_count();
      auto gi = girth(s);
      j["girth"] = gi ? nlohmann::json(*gi) : nlohmann::json();
      j["planar"] = is_planar(s);
      j["bipartite"] = is_bipartite(s);
      j["tree"] = is_tree(s);
      j["connected"] = is_connected(s);
      j["maximal_clique_count"] = maximal_clique_count(s);
    }
    if (cmd.cayley_table) {
      nlohmann::json table = nlohmann::json::array();
      for (ElementId a = 0; a < g.order(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (ElementId b = 0; b < g.order(); ++b) row.push_back(g.op(a, b));
        table.push_back(std::move(row));
      }
      j["cayley_table"] = std::move(table);
    }
    if (cmd.morphisms) {
      std::optional<std::vector<Morphism>> morphs;
      if (prepared.kind == GraphKind::Auto) {
        morphs = enumerate_automorphisms(g, cmd.enum_budget);
      } else if (prepared.kind == GraphKind::EndoDirected ||
                 prepared.kind == GraphKind::Endo) {
        if (auto monoid = enumerate_endomorphisms(g, cmd.enum_budget))
          morphs = std::move(monoid->morphisms);
      } else {
        throw UsageError("--morphisms applies to endo and auto kinds only");
      }
      if (!morphs)
        throw BudgetError("analyze: morphism enumeration exceeds the budget");
      nlohmann::json images = nlohmann::json::array();
      for (const auto& m : *morphs) images.push_back(m.image);
      j["morphisms"] = std::move(images);
    }
    std::ofstream file;
    std::ostream& os = sink(cmd.out, file, out);
    if (cmd.format == "json") {
      os << j.dump(2) << "\n";
      return 0;
    }
    if (cmd.format != "text")
      throw UsageError("analyze: format must be text or json");
    os << "group: " << g.descriptor().name << " (order " << g.order()
       << ", family " << g.descriptor().family << ")\n";
    os << "kind: " << to_string(prepared.kind)
       << (cmd.delete_identity ? ", identity deleted" : "") << "\n";
    os << "strategy: " << prepared.strategy << "\n";
    if (directed) {
      os << "vertices: " << j["vertices"].get<int>() << "\n";
      os << "arcs: " << j["arcs"].get<long>() << "\n";
      os << "strongly connected: "
         << (j["strongly_connected"].get<bool>() ? "yes" : "no") << "\n";
      os << "single point basis: "
         << (j["single_point_basis"].get<bool>() ? "yes" : "no") << "\n";
      os << "minimum point basis:";
      for (int v : j["minimum_point_basis"]) os << " " << v;
      os << "\n";
    } else {
      os << "vertices: " << j["vertices"].get<int>() << "\n";
      os << "edges: " << j["edges"].get<long>() << "\n";
      os << "girth: "
         << (j["girth"].is_null() ? std::string("infinite")
                                  : std::to_string(j["girth"].get<int>()))
         << "\n";
      os << "planar: " << (j["planar"].get<bool>() ? "yes" : "no") << "\n";
      os << "bipartite: " << (j["bipartite"].get<bool>() ? "yes" : "no")
         << "\n";
      os << "tree: " << (j["tree"].get<bool>() ? "yes" : "no") << "\n";
      os << "connected: " << (j["connected"].get<bool>() ? "yes" : "no")
         << "\n";
      os << "maximal cliques: " << j["maximal_clique_count"].get<long>()
         << "\n";
    }
    if (cmd.cayley_table) {
      os << "cayley table:\n";
      for (const auto& row : j["cayley_table"]) {
        os << " ";
        for (const auto& v : row) os << " " << std::setw(3) << v.get<int>();
        os << "\n";
      }
    }
    if (cmd.morphisms) {
      os << "morphisms (" << j["morphisms"].size() << "):\n";
      for (const auto& image : j["morphisms"]) {
        os << " ";
        for (const auto& v : image) os << " " << v.get<int>();
        os << "\n";
      }
    }
    return 0;
  });
}

int run_verify(const VerifyCommand& cmd, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&]() {
    VerifyConfig config = cmd.config;
    if (cmd.max_n) {
      int n = *cmd.max_n;
      config.cyclic_max = n;
      config.formula_max = std::max(2, n);
      config.abelian_enum_max = n;
      config.abelian_fast_max = n;
      config.oracle_cross_max = std::min<long>(n, config.oracle_cross_max);
      config.catalog_max = std::min(15, n);
    }
    auto report = run_all(config, cmd.only);
    std::ofstream file;
    std::ostream& os = sink(cmd.out, file, out);
    if (cmd.format == "json")
      os << report_to_json(report).dump(2) << "\n";
    else if (cmd.format == "text")
      os << report_to_text(report);
    else
      throw UsageError("verify: format must be text or json");
    if (!cmd.report_path.empty()) {
      std::ofstream rf(cmd.report_path);
      if (!rf)
        throw UsageError("cannot open report file '" + cmd.report_path + "'");
      rf << report_to_json(report).dump(2) << "\n";
    }
    return report.verdict == "pass" ? 0 : 1;
  });
}

int run_hunt(const HuntCommand& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() {
    auto findings = hunt_catalog(cmd.max_order, cmd.enum_budget);
    long directed_hits = 0, undirected_hits = 0;
    for (const auto& f : findings) {
      if (f.groups_isomorphic) continue;
      if (f.directed_isomorphic) ++directed_hits;
      if (f.undirected_isomorphic && !f.directed_isomorphic)
        ++undirected_hits;
    }
    std::ofstream file;
    std::ostream& os = sink(cmd.out, file, out);
    if (cmd.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& f : findings)
        arr.push_back({{"group_a", f.group_a},
                       {"group_b", f.group_b},
                       {"groups_isomorphic", f.groups_isomorphic},
                       {"directed_isomorphic", f.directed_isomorphic},
                       {"undirected_isomorphic", f.undirected_isomorphic}});
      nlohmann::json j{{"max_order", cmd.max_order},
                       {"pairs_scanned", findings.size()},
                       {"directed_coincidences", directed_hits},
                       {"undirected_only_coincidences", undirected_hits},
                       {"findings", std::move(arr)}};
      os << j.dump(2) << "\n";
      return 0;
    }
    if (cmd.format != "text")
      throw UsageError("hunt: format must be text or json");
    os << "scanned " << findings.size()
       << " same-order pairs of catalog groups (order <= " << cmd.max_order
       << ")\n";
    for (const auto& f : findings) {
      if (f.groups_isomorphic) continue;
      if (f.directed_isomorphic)
        os << "directed coincidence: " << f.group_a << " vs " << f.group_b
           << " (non-isomorphic groups, isomorphic directed endomorphism "
              "graphs)\n";
      else if (f.undirected_isomorphic)
        os << "undirected-only coincidence: " << f.group_a << " vs "
           << f.group_b << " (directed endomorphism graphs differ)\n";
    }
    os << "directed coincidences: " << directed_hits << "\n";
    os << "undirected-only coincidences: " << undirected_hits << "\n";
    return 0;
  });
}

int run_list_groups(const ListGroupsCommand& cmd, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&]() {
    auto groups = catalog_groups_up_to(cmd.max_order);
    std::ofstream file;
    std::ostream& os = sink(cmd.out, file, out);
    if (cmd.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& g : groups) arr.push_back(group_json(g));
      os << arr.dump(2) << "\n";
      return 0;
    }
    if (cmd.format != "text")
      throw UsageError("list-groups: format must be text or json");
    os << "order  abelian  family      name\n";
    for (const auto& g : groups)
      os << std::left << std::setw(7) << g.order() << std::setw(9)
         << (g.is_abelian() ? "yes" : "no") << std::setw(12)
         << g.descriptor().family << g.descriptor().name << "\n";
    return 0;
  });
}

}  // namespace endograph
