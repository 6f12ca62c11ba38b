#include <iostream>

#include <CLI11.hpp>

#include "endograph/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "endograph: endomorphism, automorphism and power graphs of finite "
      "groups"};
  app.require_subcommand(1);

  const std::string selector_help =
      "Group selector: cyclic:N, abelian:p^a{xp^a...} (e.g. abelian:2^3x2 for "
      "Z8 x Z2), quaternion, dihedral:N, symmetric:N, alternating:4, "
      "dicyclic:3";
  const std::string kind_help =
      "Graph kind: endo-directed, endo, auto, power-directed, power";

  endograph::BuildCommand build_cmd;
  auto* build = app.add_subcommand("build", "Build a graph and export it");
  build->add_option("--group", build_cmd.selector, selector_help)->required();
  build->add_option("--kind", build_cmd.kind, kind_help);
  build->add_option("--format", build_cmd.format, "Output format: dot|json|text");
  build->add_option("--out", build_cmd.out, "Write output to a file");
  build->add_flag("--delete-identity", build_cmd.delete_identity,
                  "Remove the identity vertex");
  build->add_flag("--labels", build_cmd.labels,
                  "Coordinate labels for abelian products");
  build->add_option("--max-enum-budget", build_cmd.enum_budget,
                    "Endomorphism enumeration budget (default 1e6)");

  endograph::AnalyzeCommand analyze_cmd;
  auto* analyze =
      app.add_subcommand("analyze", "Build a graph and report its properties");
  analyze->add_option("--group", analyze_cmd.selector, selector_help)
      ->required();
  analyze->add_option("--kind", analyze_cmd.kind, kind_help);
  analyze->add_option("--format", analyze_cmd.format,
                      "Output format: text|json");
  analyze->add_option("--out", analyze_cmd.out, "Write output to a file");
  analyze->add_flag("--delete-identity", analyze_cmd.delete_identity,
                    "Remove the identity vertex");
  analyze->add_flag("--cayley-table", analyze_cmd.cayley_table,
                    "Include the Cayley table");
  analyze->add_flag("--morphisms", analyze_cmd.morphisms,
                    "Include the morphism image arrays (endo/auto kinds)");
  analyze->add_option("--max-enum-budget", analyze_cmd.enum_budget,
                      "Endomorphism enumeration budget (default 1e6)");

  endograph::VerifyCommand verify_cmd;
  auto* verify =
      app.add_subcommand("verify", "Run the theorem verification suite");
  verify->add_option("--format", verify_cmd.format, "Output format: text|json");
  verify->add_option("--out", verify_cmd.out, "Write output to a file");
  verify->add_option("--report", verify_cmd.report_path,
                     "Also write the JSON report to this file");
  verify->add_option("--only", verify_cmd.only,
                     "Run only these check ids (repeatable)");
  int max_n = 0;
  auto* max_n_opt = verify->add_option(
      "--max-n", max_n, "Scale every fleet bound to N (catalog stays <= 15)");
  verify->add_option("--catalog-max", verify_cmd.config.catalog_max,
                     "Catalog order bound (<= 15)");
  verify->add_option("--cyclic-max", verify_cmd.config.cyclic_max,
                     "Cyclic fleet bound");
  verify->add_option("--formula-max", verify_cmd.config.formula_max,
                     "Edge/clique formula fleet bound");
  verify->add_option("--abelian-enum-max", verify_cmd.config.abelian_enum_max,
                     "Abelian fleet bound for enumeration-backed checks");
  verify->add_option("--abelian-fast-max", verify_cmd.config.abelian_fast_max,
                     "Abelian fleet bound for fast-path-only checks");
  verify->add_option("--oracle-cross-max", verify_cmd.config.oracle_cross_max,
                     "Order bound for the enumeration-vs-fast-path audit");
  verify->add_option("--max-enum-budget", verify_cmd.config.enum_budget,
                     "Endomorphism enumeration budget (default 1e6)");
  verify->add_flag("--timings", verify_cmd.config.include_timings,
                   "Record wall-clock timings (reports stop being byte-stable)");

  endograph::HuntCommand hunt_cmd;
  auto* hunt = app.add_subcommand(
      "hunt", "Sweep catalog pairs for endomorphism digraph coincidences");
  hunt->add_option("--max-order", hunt_cmd.max_order,
                   "Catalog order bound (<= 15)");
  hunt->add_option("--format", hunt_cmd.format, "Output format: text|json");
  hunt->add_option("--out", hunt_cmd.out, "Write output to a file");
  hunt->add_option("--max-enum-budget", hunt_cmd.enum_budget,
                   "Endomorphism enumeration budget (default 1e6)");

  endograph::ListGroupsCommand list_cmd;
  auto* list = app.add_subcommand("list-groups", "List the group catalog");
  list->add_option("--max-order", list_cmd.max_order,
                   "Catalog order bound (<= 15)");
  list->add_option("--format", list_cmd.format, "Output format: text|json");
  list->add_option("--out", list_cmd.out, "Write output to a file");

  bool seedless = false;
  app.add_flag("--seedless", seedless,
               "Reserved; every command is already deterministic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (max_n_opt->count() > 0) verify_cmd.max_n = max_n;

  if (build->parsed())
    return endograph::run_build(build_cmd, std::cout, std::cerr);
  if (analyze->parsed())
    return endograph::run_analyze(analyze_cmd, std::cout, std::cerr);
  if (verify->parsed())
    return endograph::run_verify(verify_cmd, std::cout, std::cerr);
  if (hunt->parsed()) return endograph::run_hunt(hunt_cmd, std::cout, std::cerr);
  if (list->parsed())
    return endograph::run_list_groups(list_cmd, std::cout, std::cerr);
  return 2;
}
