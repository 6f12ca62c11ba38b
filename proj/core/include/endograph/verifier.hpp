#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "endograph/builders.hpp"
#include "endograph/catalog.hpp"

namespace endograph {

struct VerifyConfig {
  int catalog_max = 15;        // catalog fleets (order <= 15)
  long cyclic_max = 48;        // power/endo digraph equality sweep
  long formula_max = 60;       // edge and clique count formulas
  long abelian_enum_max = 32;  // abelian fleets for planarity/connectivity
  long abelian_fast_max = 64;  // abelian fleets served by the arc fast path
  long oracle_cross_max = 16;  // enumeration-vs-fast-path audit bound
  long enum_budget = kDefaultEnumBudget;
  bool include_timings = false;  // elapsed_ms stays 0 for byte-stable reports
};

struct Witness {
  std::string group;
  std::string observed;
  std::string expected;
};

struct TheoremCheck {
  std::string id;
  std::string title;
  std::string fleet;
  std::string status;  // "pass" | "fail"
  std::vector<Witness> witnesses;
  double elapsed_ms = 0.0;

  bool passed() const { return status == "pass"; }
};

struct VerificationReport {
  VerifyConfig config;
  std::vector<TheoremCheck> checks;
  // "pass" iff every asserting check passed; the conjecture hunt only
  // reports and can never flip the verdict.
  std::string verdict;
};

// One same-order catalog pair from the conjecture sweep.
struct HuntFinding {
  std::string group_a;
  std::string group_b;
  bool groups_isomorphic = false;
  bool directed_isomorphic = false;
  bool undirected_isomorphic = false;
};

std::vector<HuntFinding> hunt_catalog(int max_order,
                                      long budget = kDefaultEnumBudget);

std::vector<std::string> all_check_ids();

// Runs every check (or the `only` subset, by exact id) in registry order.
// Throws UsageError for unknown ids or out-of-range config values.
VerificationReport run_all(const VerifyConfig& config = {},
                           const std::vector<std::string>& only = {});

nlohmann::json config_to_json(const VerifyConfig& config);
nlohmann::json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace endograph
