#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "stanley/json_io.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(STANLEY_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe))
    output.append(buffer, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "stanley-cli-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sdepth prints the value and exits 0") {
  CliResult result = run_cli("sdepth '(x1,x2,x3)'");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("sdepth = 2") != std::string::npos);
}

TEST_CASE("sdepth respects a declared variable count") {
  CliResult result = run_cli("sdepth '(x1^2,x2^3)' --vars 2 --json");
  CHECK(result.exit_code == 0);
  stanley::json j = stanley::json::parse(result.output);
  CHECK(j["sdepth"] == 1);
  CHECK(j["status"] == "exact");
}

TEST_CASE("parse failures exit 1 with a position diagnostic") {
  CliResult result = run_cli("sdepth '(x1'");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("position") != std::string::npos);
}

TEST_CASE("an exhausted budget exits 3 and prints bounds") {
  CliResult result =
      run_cli("sdepth '(x1*x2, x2*x3, x3*x4, x4*x5, x1*x5)' --budget 3");
  CHECK(result.exit_code == 3);
  CHECK(result.output.find("bounds [") != std::string::npos);

  CliResult env_result = run_cli("sdepth '(x1*x2, x2*x3, x3*x4, x4*x5, x1*x5)'");
  CHECK(env_result.exit_code == 0);  // default budget suffices
  std::string env_command = "STANLEY_BUDGET=3 " + std::string(STANLEY_CLI_PATH) +
                            " sdepth '(x1*x2, x2*x3, x3*x4, x4*x5, x1*x5)' 2>&1";
  FILE* pipe = popen(env_command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::fread(buffer, 1, sizeof buffer, pipe) > 0) {}
  CHECK(WEXITSTATUS(pclose(pipe)) == 3);
}

TEST_CASE("certificates written by sdepth verify cleanly") {
  auto dir = scratch_dir();
  auto cert = (dir / "max3_cert.json").string();
  auto deco = (dir / "max3_deco.json").string();
  CliResult result =
      run_cli("sdepth '(x1,x2,x3)' --certificate " + cert + " --decomposition " + deco);
  CHECK(result.exit_code == 0);

  CliResult verify_cert = run_cli("verify '(x1,x2,x3)' " + cert);
  CHECK(verify_cert.exit_code == 0);
  CHECK(verify_cert.output.find("min rho = 2") != std::string::npos);

  CliResult verify_deco = run_cli("verify '(x1,x2,x3)' " + deco);
  CHECK(verify_deco.exit_code == 0);
  CHECK(verify_deco.output.find("sdepth = 2") != std::string::npos);
}

TEST_CASE("verify exits 2 on an overlapping decomposition and names a witness") {
  auto file = (scratch_dir() / "overlap.json").string();
  std::ofstream(file) << R"({"n": 2, "spaces": [
    {"u": [0, 1], "Z": [1, 2]},
    {"u": [1, 0], "Z": [1, 2]}
  ]})";
  CliResult result = run_cli("verify '(x1,x2)' " + file);
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("invalid") != std::string::npos);
  CHECK(result.output.find("x1*x2") != std::string::npos);
}

TEST_CASE("verify reports the file's own sdepth, not the optimum") {
  auto file = (scratch_dir() / "suboptimal.json").string();
  std::ofstream(file) << R"({"n": 2, "spaces": [
    {"u": [0, 1], "Z": [2]},
    {"u": [1, 1], "Z": [1, 2]},
    {"u": [1, 0], "Z": [1]}
  ]})";
  CliResult result = run_cli("verify '(x1,x2)' " + file);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("sdepth = 1") != std::string::npos);
}

TEST_CASE("missing or malformed files exit 1") {
  CHECK(run_cli("verify '(x1)' /nonexistent/file.json").exit_code == 1);
  auto file = (scratch_dir() / "garbage.json").string();
  std::ofstream(file) << "{ not json";
  CHECK(run_cli("verify '(x1)' " + file).exit_code == 1);
}

TEST_CASE("transform lift and lower round-trip through files") {
  auto dir = scratch_dir();
  auto cert = (dir / "sq_cert.json").string();
  auto lifted = (dir / "sq_lifted.json").string();
  auto back = (dir / "sq_back.json").string();
  REQUIRE(run_cli("sdepth '(x1,x2)' --certificate " + cert).exit_code == 0);

  CliResult lift = run_cli("transform lift '(x1,x2)' --in " + cert + " --var 1 --out " + lifted);
  CHECK(lift.exit_code == 0);
  CHECK(lift.output.find("(x1^2,x2)") != std::string::npos);
  CHECK(run_cli("verify '(x1^2,x2)' " + lifted).exit_code == 0);

  CliResult lower =
      run_cli("transform lower '(x1^2,x2)' --in " + lifted + " --var 1 --out " + back);
  CHECK(lower.exit_code == 0);
  std::ifstream a(cert), b(back);
  std::string cert_text((std::istreambuf_iterator<char>(a)), {});
  std::string back_text((std::istreambuf_iterator<char>(b)), {});
  CHECK(cert_text == back_text);
}

TEST_CASE("transform preconditions exit 1 with a named reason") {
  auto cert = (scratch_dir() / "shared_cert.json").string();
  REQUIRE(run_cli("sdepth '(x1*x2,x2*x3)' --certificate " + cert).exit_code == 0);
  CliResult result = run_cli("transform lift '(x1*x2,x2*x3)' --in " + cert + " --var 2");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("two generators") != std::string::npos);

  auto deco = (scratch_dir() / "proj_deco.json").string();
  REQUIRE(run_cli("sdepth '(x1,x2*x3)' --decomposition " + deco).exit_code == 0);
  CliResult drop = run_cli("transform project '(x1,x2*x3)' --in " + deco + " --drop 2");
  CHECK(drop.exit_code == 1);
  CHECK(drop.output.find("last variable") != std::string::npos);
}

TEST_CASE("transform project maps the worked three-variable file to two variables") {
  auto dir = scratch_dir();
  auto dprime = (dir / "dprime.json").string();
  std::ofstream(dprime) << R"({"n": 3, "spaces": [
    {"u": [0, 1, 1], "Z": [1, 2, 3]},
    {"u": [1, 0, 0], "Z": [1, 3]},
    {"u": [1, 1, 0], "Z": [1, 2]}
  ]})";
  auto projected = (dir / "projected.json").string();
  CliResult result =
      run_cli("transform project '(x1, x2*x3)' --in " + dprime + " --drop 3 --out " + projected);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("image ideal: (x1,x2)") != std::string::npos);
  CHECK(result.output.find("sdepth: 2 -> 1") != std::string::npos);
  CHECK(run_cli("verify '(x1,x2)' " + projected).exit_code == 0);
}

TEST_CASE("transform radical-chain counts the surplus exponents") {
  CliResult result = run_cli("transform radical-chain '(x1^3,x2^2)'");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("3 steps") != std::string::npos);
  CHECK(result.output.find("(x1,x2)") != std::string::npos);

  CliResult noop = run_cli("transform radical-chain '(x1,x2)'");
  CHECK(noop.exit_code == 0);
  CHECK(noop.output.find("already radical") != std::string::npos);
}

TEST_CASE("scan-ci writes one record per shape and a summary") {
  auto out = (scratch_dir() / "scan2.jsonl").string();
  CliResult result = run_cli("scan-ci --nmax 2 --out " + out);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("4 records, 4 match") != std::string::npos);
  std::ifstream in(out);
  int lines = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 4);
}

TEST_CASE("scan-ci --resume skips finished records and appends") {
  auto dir = scratch_dir();
  auto full = (dir / "scan3_full.jsonl").string();
  auto partial = (dir / "scan3_partial.jsonl").string();
  REQUIRE(run_cli("scan-ci --nmax 3 --out " + full).exit_code == 0);
  {
    std::ifstream in(full);
    std::ofstream out(partial);
    std::string line;
    for (int i = 0; i < 4 && std::getline(in, line); ++i) out << line << "\n";
  }
  CliResult resumed = run_cli("scan-ci --nmax 3 --out " + partial + " --resume " + partial);
  CHECK(resumed.exit_code == 0);
  CHECK(resumed.output.find("(4 resumed)") != std::string::npos);
  // record-by-record comparison, ignoring the wall-clock field
  std::ifstream a(full), b(partial);
  std::string line_a, line_b;
  int compared = 0;
  while (std::getline(a, line_a) && std::getline(b, line_b)) {
    stanley::json ja = stanley::json::parse(line_a);
    stanley::json jb = stanley::json::parse(line_b);
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja == jb);
    ++compared;
  }
  CHECK(compared == 10);
  CHECK_FALSE(std::getline(b, line_b));
}

TEST_CASE("poset show lists points with rho") {
  CliResult result = run_cli("poset show '(x1^2,x2)'");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("g = (2,1)") != std::string::npos);
  CHECK(result.output.find("(2,0)  rho = 1") != std::string::npos);

  CliResult as_json = run_cli("poset show '(x1^2,x2)' --json");
  stanley::json j = stanley::json::parse(as_json.output);
  CHECK(j["points"].size() == 4);
}

TEST_CASE("unknown flags and missing subcommands exit nonzero") {
  CHECK(run_cli("sdepth '(x1)' --frobnicate").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

}  // TEST_SUITE
