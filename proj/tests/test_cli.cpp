#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Drives the installed binary end to end. The path is baked in at configure
// time; every case runs a full process and inspects stdout plus the exit code.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(DOWNSET_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has_line(const std::string& out, const std::string& line) {
  return out.find(line + "\n") != std::string::npos;
}

std::string write_fixture(const std::string& name, const std::string& content) {
  std::string path = "/tmp/downset_cli_" + name + ".cplx";
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("grundy of the 6-cube") {
  RunResult r = run_cli("grundy --n 6 --k 6 --stats");
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "command=grundy"));
  CHECK(has_line(r.out, "input=P(6,6)"));
  CHECK(has_line(r.out, "value=3"));
  CHECK(r.out.find("positions_stored=") != std::string::npos);
  CHECK(r.out.find("positions_visited=") != std::string::npos);
  CHECK(r.out.find("elapsed_ms=") != std::string::npos);
}

TEST_CASE("extension count of the 4-cube") {
  RunResult r = run_cli("linext --n 4 --k 4");
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "value=1680384"));
  // no stats unless asked
  CHECK(r.out.find("positions_stored") == std::string::npos);
}

TEST_CASE("win/loss tokens") {
  CHECK(has_line(run_cli("winloss --n 0 --k 0").out, "value=first-player-loss"));
  CHECK(has_line(run_cli("winloss --n 6 --k 5").out, "value=first-player-loss"));
  CHECK(has_line(run_cli("winloss --n 5 --k 5").out, "value=first-player-win"));
}

TEST_CASE("the published graph antichain evaluates through a file") {
  std::string path = write_fixture(
      "g9", "n=7\n01, 02, 03, 04, 05, 06, 12, 13, 14, 15, 23, 24, 35, 46\n");
  RunResult r = run_cli("grundy --input " + path);
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "value=9"));
  CHECK(has_line(r.out, "input=" + path));
}

TEST_CASE("winning moves list face tokens") {
  RunResult r = run_cli("moves --n 1 --k 1");
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "value=0"));

  RunResult square = run_cli("moves --n 2 --k 2");
  CHECK(has_line(square.out, "value=01"));

  RunResult loss = run_cli("moves --n 2 --k 1");
  CHECK(has_line(loss.out, "value="));
  CHECK(loss.exit_code == 0);

  RunResult first = run_cli("moves --n 2 --k 2 --find-first");
  CHECK(has_line(first.out, "value=01"));
}

TEST_CASE("closed-form command emits the published constant") {
  RunResult r = run_cli("linext-formula --n 8");
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "value=183516891399909333860213587968000000"));
}

TEST_CASE("census command") {
  RunResult r = run_cli("enumerate --n 4");
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "labeled=168"));
  CHECK(has_line(r.out, "unlabeled=30"));
  CHECK(has_line(r.out, "value=168/30"));
}

TEST_CASE("json output is structured and exact") {
  RunResult r = run_cli("grundy --n 6 --k 6 --json --stats");
  CHECK(r.exit_code == 0);
  nlohmann::json record = nlohmann::json::parse(r.out);
  CHECK(record["command"] == "grundy");
  CHECK(record["value"] == 3);
  CHECK(record["positions_stored"].get<std::uint64_t>() >= 1);

  nlohmann::json ext = nlohmann::json::parse(run_cli("linext --n 5 --k 5 --json").out);
  CHECK(ext["value"] == "14807804035657359360");

  nlohmann::json moves = nlohmann::json::parse(run_cli("moves --n 2 --k 2 --json").out);
  REQUIRE(moves["value"].is_array());
  CHECK(moves["value"][0] == "01");
}

TEST_CASE("reduce prints a reparseable fixed family") {
  std::string path = write_fixture("two", "n=2\n0, 1\n");
  RunResult r = run_cli("reduce --input " + path + " --involution \"(0 1)\"");
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "n=2"));
  CHECK(has_line(r.out, "value=empty"));

  RunResult identity = run_cli("reduce --n 3 --k 3 --involution id");
  CHECK(has_line(identity.out, "value=012"));
}

TEST_CASE("reduce round-trips through the position format") {
  // chomping {2,3} out of P(4,3) leaves a family swapped onto itself by
  // (2 3); its fixed part is the square on {0,1}, and the reduction theorem
  // says both positions carry the same value. Feed the printed family back
  // in and check that through two more invocations.
  std::string path = write_fixture("p43chomp", "n=4\n012, 013\n");
  RunResult r = run_cli("reduce --input " + path + " --involution \"(2 3)\"");
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.out, "value=01"));
  std::size_t at = r.out.find("value=");
  REQUIRE(at != std::string::npos);
  std::string faces = r.out.substr(at + 6, r.out.find('\n', at) - at - 6);
  std::string back = write_fixture("p43fixed", "n=4\n" + faces + "\n");
  RunResult whole = run_cli("grundy --input " + path);
  RunResult fixed = run_cli("grundy --input " + back);
  CHECK(has_line(whole.out, "value=2"));
  CHECK(has_line(fixed.out, "value=2"));
}

TEST_CASE("exit codes distinguish the failure families") {
  CHECK(run_cli("grundy --n 3").exit_code == 2);               // missing --k
  CHECK(run_cli("grundy").exit_code == 2);                     // no position at all
  CHECK(run_cli("grundy --input /nonexistent").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("grundy --n 9 --k 2").exit_code == 3);         // past the bound
  CHECK(run_cli("grundy --n 2 --k 3").exit_code == 3);         // k > n
  CHECK(run_cli("grundy --n 5 --k 5 --memo-limit 2").exit_code == 4);
  CHECK(run_cli("reduce --n 2 --k 2 --involution \"(0 1)\"").exit_code == 5);

  std::string empty_family = write_fixture("none", "n=3\n\n");
  CHECK(run_cli("grundy --input " + empty_family).exit_code == 3);

  std::string bad = write_fixture("bad", "n=oops\n\n");
  CHECK(run_cli("grundy --input " + bad).exit_code == 2);
}

TEST_CASE("identical invocations agree") {
  std::string a = run_cli("grundy --n 5 --k 3").out;
  std::string b = run_cli("grundy --n 5 --k 3").out;
  CHECK(a == b);
}

TEST_CASE("parallel evaluation emits the same value") {
  RunResult seq = run_cli("grundy --n 5 --k 5");
  RunResult par = run_cli("grundy --n 5 --k 5 --threads 4");
  std::size_t at = seq.out.find("value=");
  CHECK(par.out.find(seq.out.substr(at)) != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("grundy --help").exit_code == 0);
}
