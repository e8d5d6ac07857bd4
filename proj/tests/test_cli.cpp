#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Process-level tests of the command-line tool. The binary path and catalog
// directory arrive through the environment (set by CTest).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args, const std::string& env = "") {
  const char* cli = std::getenv("KNOTFORGE_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "KNOTFORGE_CLI must point at the binary");
  const std::string command =
      (env.empty() ? "" : "env " + env + " ") + std::string(cli) + " " + args + " 2>&1";
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  size_t got = 0;
  while ((got = ::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string catalog_dir() {
  const char* dir = std::getenv("KNOTFORGE_CATALOG");
  REQUIRE_MESSAGE(dir != nullptr, "KNOTFORGE_CATALOG must point at the data");
  return dir;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("knotforge-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("bounds subcommand prints the report") {
  const RunResult general = run("bounds --crossings 8 --class general");
  CHECK(general.exit_code == 0);
  CHECK(contains(general.output, "exact 112"));

  const RunResult torus = run("bounds --torus 3");
  CHECK(torus.exit_code == 0);
  CHECK(contains(torus.output, "exact 60"));

  const RunResult nonalt = run("bounds --crossings 8 --class nonalt-prime");
  CHECK(nonalt.exit_code == 0);
  CHECK(contains(nonalt.output, "exact 66"));
  CHECK(contains(nonalt.output, "theorem 66.5"));

  const RunResult trefoil_torus = run("bounds --torus 2");
  CHECK(trefoil_torus.exit_code != 0);
  CHECK(contains(trefoil_torus.output, "3_1"));
}

TEST_CASE("build subcommand: methods, outputs, failure modes") {
  TempDir tmp;
  const std::string catalog = catalog_dir();

  const RunResult lifted = run("build " + catalog + "/4_1.json --method lifted");
  CHECK(lifted.exit_code == 0);
  CHECK(contains(lifted.output, "sticks x=4 y=5 z=5"));

  const RunResult not_applicable = run("build " + catalog + "/3_1.json --method lifted");
  CHECK(not_applicable.exit_code != 0);
  CHECK(contains(not_applicable.output, "not applicable"));

  const std::string out = (tmp.path / "trefoil.json").string();
  const RunResult reduced = run("build " + catalog + "/3_1.json --method reduced -o " + out +
                                " --obj " + (tmp.path / "trefoil.obj").string());
  CHECK(reduced.exit_code == 0);
  CHECK(contains(reduced.output, "total=28"));
  CHECK(std::filesystem::exists(out));
  CHECK(std::filesystem::exists(tmp.path / "trefoil.obj"));
}

TEST_CASE("verify subcommand pass and fail paths") {
  TempDir tmp;
  const std::string catalog = catalog_dir();
  const std::string knot = (tmp.path / "k.json").string();
  REQUIRE(run("build " + catalog + "/3_1.json --method reduced -o " + knot).exit_code == 0);

  const std::string dump = (tmp.path / "diagram.json").string();
  const RunResult pass =
      run("verify " + knot + " --against " + catalog + "/3_1.json --dump-diagram " + dump);
  CHECK(pass.exit_code == 0);
  CHECK(contains(pass.output, "result pass"));
  CHECK(std::filesystem::exists(dump));

  const RunResult mismatch = run("verify " + knot + " --against " + catalog + "/4_1.json");
  CHECK(mismatch.exit_code != 0);
  CHECK(contains(mismatch.output, "alexander mismatch"));

  // A flat square is a valid embedding but not properly leveled.
  std::ofstream(tmp.path / "square.json")
      << R"({"vertices": [[0,0,0],[1,0,0],[1,1,0],[0,1,0]]})";
  const RunResult flat =
      run("verify " + (tmp.path / "square.json").string() + " --against " + catalog + "/3_1.json");
  CHECK(flat.exit_code != 0);
  CHECK(contains(flat.output, "leveled fail"));
}

TEST_CASE("projection retry budget is read from the environment") {
  TempDir tmp;
  const std::string catalog = catalog_dir();
  const std::string knot = (tmp.path / "k.json").string();
  REQUIRE(run("build " + catalog + "/5_1.json -o " + knot).exit_code == 0);
  // Catalog knots are generic on the first attempt, so a zero retry budget
  // still passes.
  const RunResult strict =
      run("verify " + knot + " --against " + catalog + "/5_1.json", "KNOTFORGE_EPSILON_RETRIES=0");
  CHECK(strict.exit_code == 0);
  CHECK(contains(strict.output, "attempts=1"));
}

TEST_CASE("catalog subcommand writes the report and fails on an empty directory") {
  TempDir tmp;
  const std::string report = (tmp.path / "report.csv").string();
  const RunResult full = run("catalog --dir " + catalog_dir() + " --report " + report);
  CHECK(full.exit_code == 0);
  CHECK(contains(full.output, "catalog ok (11 entries)"));

  std::ifstream csv(report);
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header ==
        "name,method,x_sticks,y_sticks,z_sticks,edges,class_bound,minimal_length,alexander_ok");
  std::string prev_name;
  int rows = 0;
  for (std::string line; std::getline(csv, line);) {
    if (line.empty()) continue;
    ++rows;
    const std::string name = line.substr(0, line.find(','));
    CHECK(prev_name < name);  // rows ordered by input name
    prev_name = name;
    CHECK(line.back() == '1');  // alexander_ok on every row
  }
  CHECK(rows == 11);

  const RunResult empty = run("catalog --dir " + tmp.path.string());
  CHECK(empty.exit_code != 0);
  CHECK(contains(empty.output, "no entries"));
}
