#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "endograph/cli.hpp"

using namespace endograph;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  auto path = std::filesystem::temp_directory_path() /
              ("endograph_cli_" + std::to_string(++counter) + ".out");
  std::string cmd = std::string(ENDOGRAPH_CLI_PATH) + " " + args + " > " +
                    path.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  std::filesystem::remove(path);
  return r;
}

}  // namespace

TEST_CASE("build dot output") {
  auto r = run_cli("build --group cyclic:6 --kind auto --format dot");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1 -- 5;") != std::string::npos);
  CHECK(r.output.find("2 -- 4;") != std::string::npos);
  CHECK(r.output.find("->") == std::string::npos);
}

TEST_CASE("build json output") {
  auto r = run_cli("build --group cyclic:6 --kind endo --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["vertices"] == 6);
  CHECK(j["edges"].size() == 13);
  CHECK(j["directed"] == false);
  CHECK(j["group"]["name"] == "Z6");
  CHECK(j["strategy"] == "enumeration");

  auto trivial = run_cli("build --group cyclic:1 --kind endo --format json");
  CHECK(trivial.exit_code == 0);
  auto tj = nlohmann::json::parse(trivial.output);
  CHECK(tj["vertices"] == 1);
  CHECK(tj["edges"].empty());
}

TEST_CASE("abelian selector grammar") {
  auto r = run_cli("build --group abelian:2^3x2 --kind power --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["group"]["name"] == "Z8 x Z2");
  CHECK(j["group"]["order"] == 16);

  CHECK(run_cli("build --group abelian:x2").exit_code == 2);
  CHECK(run_cli("build --group abelian:2^").exit_code == 2);
  CHECK(run_cli("build --group catalog:15").exit_code == 2);
  CHECK(run_cli("build --group mystery:4").exit_code == 2);
}

TEST_CASE("coordinate labels") {
  auto r = run_cli("build --group abelian:2x2 --kind endo --labels");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("label=\"(0,0)\"") != std::string::npos);
  CHECK(r.output.find("label=\"(1,1)\"") != std::string::npos);
}

TEST_CASE("analyze undirected reports") {
  auto k5 = run_cli("analyze --group cyclic:5 --kind endo");
  CHECK(k5.exit_code == 0);
  CHECK(k5.output.find("vertices: 5") != std::string::npos);
  CHECK(k5.output.find("edges: 10") != std::string::npos);
  CHECK(k5.output.find("girth: 3") != std::string::npos);
  CHECK(k5.output.find("planar: no") != std::string::npos);

  auto k2 = run_cli("analyze --group cyclic:2 --kind endo");
  CHECK(k2.exit_code == 0);
  CHECK(k2.output.find("bipartite: yes") != std::string::npos);
  CHECK(k2.output.find("tree: yes") != std::string::npos);
  CHECK(k2.output.find("girth: infinite") != std::string::npos);
}

TEST_CASE("analyze directed reports") {
  auto r = run_cli("analyze --group quaternion --kind endo-directed");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("single point basis: yes") != std::string::npos);
  CHECK(r.output.find("strongly connected: no") != std::string::npos);

  auto j = nlohmann::json::parse(
      run_cli("analyze --group quaternion --kind endo-directed --format json")
          .output);
  CHECK(j["single_point_basis"] == true);
  CHECK(j["group"]["order"] == 8);
}

TEST_CASE("analyze extras") {
  auto j = nlohmann::json::parse(
      run_cli("analyze --group cyclic:4 --kind endo --format json "
              "--cayley-table --morphisms")
          .output);
  REQUIRE(j.contains("cayley_table"));
  CHECK(j["cayley_table"][1][1] == 2);
  CHECK(j["cayley_table"].size() == 4);
  REQUIRE(j.contains("morphisms"));
  CHECK(j["morphisms"].size() == 4);

  CHECK(run_cli("analyze --group cyclic:4 --kind power --morphisms")
            .exit_code == 2);
}

TEST_CASE("verify subcommand") {
  auto r = run_cli("verify --only THM-2.6 --max-n 20");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS THM-2.6") != std::string::npos);
  CHECK(r.output.find("verdict: pass") != std::string::npos);
  CHECK(r.output.find("THM-2.7") == std::string::npos);

  CHECK(run_cli("verify --only NOPE --max-n 8").exit_code == 2);
}

TEST_CASE("verify json report file") {
  auto path = std::filesystem::temp_directory_path() / "endograph_report.json";
  auto r = run_cli("verify --max-n 8 --report " + path.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  CHECK(j["verdict"] == "pass");
  CHECK(j["checks"].size() == 14);
  std::filesystem::remove(path);
}

TEST_CASE("hunt subcommand") {
  auto small = run_cli("hunt --max-order 4");
  CHECK(small.exit_code == 0);
  CHECK(small.output.find("scanned 1 same-order pairs") != std::string::npos);
  CHECK(small.output.find("Z4 vs Z2 x Z2") != std::string::npos);
  CHECK(small.output.find("directed coincidences: 0") != std::string::npos);

  CHECK(run_cli("hunt --max-order 16").exit_code == 2);

  auto j = nlohmann::json::parse(
      run_cli("hunt --max-order 8 --format json").output);
  CHECK(j["max_order"] == 8);
  bool found = false;
  for (const auto& f : j["findings"])
    if (f["group_a"] == "Z8" && f["group_b"] == "Z2 x Z4")
      found = f["directed_isomorphic"].get<bool>();
  CHECK(found);
}

TEST_CASE("list-groups subcommand") {
  auto j =
      nlohmann::json::parse(run_cli("list-groups --format json").output);
  CHECK(j.size() == 28);
  CHECK(j[0]["name"] == "Z1");

  auto text = run_cli("list-groups --max-order 6");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("Z2 x Z2") != std::string::npos);
  CHECK(text.output.find("S3") != std::string::npos);
}

TEST_CASE("exit codes for resource limits") {
  CHECK(run_cli("build --group cyclic:200 --kind endo").exit_code == 3);
  CHECK(run_cli("build --group symmetric:4 --kind auto --max-enum-budget 10")
            .exit_code == 3);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
  auto a = run_cli("build --group dihedral:4 --kind endo --format json");
  auto b = run_cli("build --group dihedral:4 --kind endo --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  auto va = run_cli("verify --max-n 10 --format json");
  auto vb = run_cli("verify --max-n 10 --format json");
  CHECK(va.exit_code == 0);
  CHECK(va.output == vb.output);
}

TEST_CASE("out flag writes files") {
  auto path = std::filesystem::temp_directory_path() / "endograph_out.dot";
  auto r = run_cli("build --group cyclic:3 --kind endo --out " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("0 -- 1;") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("library-level selector parsing") {
  CHECK(group_from_selector("cyclic:9").order() == 9);
  CHECK(group_from_selector("abelian:2x3").descriptor().name == "Z2 x Z3");
  CHECK(group_from_selector("quaternion").order() == 8);
  CHECK(group_from_selector("dihedral:7").order() == 14);
  CHECK(group_from_selector("symmetric:3").order() == 6);
  CHECK(group_from_selector("alternating:4").order() == 12);
  CHECK(group_from_selector("dicyclic:3").order() == 12);
  CHECK_THROWS_AS(group_from_selector("catalog:15"), UsageError);
  CHECK_THROWS_AS(group_from_selector("cyclic:-3"), UsageError);
  CHECK_THROWS_AS(group_from_selector("cyclic:abc"), UsageError);
  CHECK_THROWS_AS(group_from_selector("quaternion:2"), UsageError);
}
