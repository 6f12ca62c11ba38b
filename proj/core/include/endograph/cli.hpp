#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "endograph/builders.hpp"
#include "endograph/verifier.hpp"

namespace endograph {

// Parses a single-group selector: cyclic:N, abelian:p^a{xp^a...} (or plain
// x-separated factor sizes), quaternion, dihedral:N, symmetric:N,
// alternating:4, dicyclic:3. Throws UsageError for anything else, including
// the fleet selector catalog:N, which never names one group.
Group group_from_selector(const std::string& selector);

struct BuildCommand {
  std::string selector;
  std::string kind = "endo";
  std::string format = "dot";  // dot | json | text
  std::string out;             // empty writes to the stream argument
  bool delete_identity = false;
  bool labels = false;  // coordinate labels for abelian products
  long enum_budget = kDefaultEnumBudget;
};

struct AnalyzeCommand {
  std::string selector;
  std::string kind = "endo";
  std::string format = "text";  // text | json
  std::string out;
  bool delete_identity = false;
  bool cayley_table = false;
  bool morphisms = false;
  long enum_budget = kDefaultEnumBudget;
};

struct VerifyCommand {
  std::string format = "text";  // text | json
  std::string out;
  std::string report_path;  // extra JSON report file, empty = none
  std::vector<std::string> only;
  std::optional<int> max_n;  // scales every fleet bound at once
  VerifyConfig config;
};

struct HuntCommand {
  int max_order = 15;
  std::string format = "text";  // text | json
  std::string out;
  long enum_budget = kDefaultEnumBudget;
};

struct ListGroupsCommand {
  int max_order = 15;
  std::string format = "text";  // text | json
  std::string out;
};

// Each command returns the process exit code: 0 success/pass, 1 verification
// failure, 2 usage error, 3 size cap or budget exhaustion. Diagnostics go to
// err; payload goes to out or to the --out path.
int run_build(const BuildCommand& cmd, std::ostream& out, std::ostream& err);
int run_analyze(const AnalyzeCommand& cmd, std::ostream& out,
                std::ostream& err);
int run_verify(const VerifyCommand& cmd, std::ostream& out, std::ostream& err);
int run_hunt(const HuntCommand& cmd, std::ostream& out, std::ostream& err);
int run_list_groups(const ListGroupsCommand& cmd, std::ostream& out,
                    std::ostream& err);

}  // namespace endograph
