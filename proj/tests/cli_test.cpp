// End-to-end tests for the olcp binary, driven through a shell. The binary
// path arrives via the OLCP_CLI_PATH compile definition.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// Runs `env_prefix OLCP_CLI_PATH args` under /bin/sh with stdin fed from a
// file, capturing stdout/stderr separately.
CliResult run_cli(const std::string& args, const std::string& input = "",
                  const std::string& env_prefix = "") {
  static int counter = 0;
  const auto base = std::filesystem::temp_directory_path() /
                    ("olcp_cli_" + std::to_string(getpid()) + "_" +
                     std::to_string(counter++));
  const auto in_path = base.string() + ".in";
  const auto out_path = base.string() + ".out";
  const auto err_path = base.string() + ".err";
  {
    std::ofstream in(in_path);
    in << input;
  }

  std::string command = env_prefix;
  if (!command.empty()) command += ' ';
  command += std::string("'") + OLCP_CLI_PATH + "' " + args + " < '" + in_path +
             "' > '" + out_path + "' 2> '" + err_path + "'";
  const int status = std::system(command.c_str());

  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  std::filesystem::remove(in_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(contains(run_cli("--help").out, "run"));
  CHECK(run_cli("run --help").exit_code == 0);

  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("run --k 1").exit_code == 1);                  // missing --algorithm
  CHECK(run_cli("run --algorithm first-fit").exit_code == 1);  // missing --k
  CHECK(run_cli("run --k 0 --algorithm first-fit").exit_code == 1);
  CHECK(run_cli("run --k 1 --algorithm first-fit --format yaml").exit_code == 1);
  CHECK(run_cli("run --k 1 --algorithm no-such-algorithm").exit_code == 1);
  CHECK(run_cli("run --k 1 --algorithm first-fit --bogus-flag").exit_code == 1);
}

TEST_CASE("run emits a jsonl transcript on stdout and a summary on stderr") {
  const CliResult r = run_cli("run --k 1 --algorithm first-fit --format jsonl");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] ==
        R"({"step":1,"r":"0","chain":0,"stage":"S1","chains":1,"width":1})");
  CHECK(lines[8] ==
        R"({"step":9,"r":"59/128","chain":4,"stage":"S5","chains":5,"width":3})");
  CHECK(contains(r.err, "chains=5 target=5 width=3 forced=yes"));

  const CliResult unchecked =
      run_cli("run --k 1 --algorithm first-fit --format jsonl --no-check-width");
  CHECK(contains(lines_of(unchecked.out).at(0), "\"width\":null"));
  CHECK(contains(unchecked.err, "width=unchecked"));
}

TEST_CASE("run emits csv with a header row") {
  const CliResult r = run_cli("run --k 1 --algorithm first-fit --format csv");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] == "step,r,chain,stage,chains,width");
  CHECK(lines[1] == "1,0,0,S1,1,1");
  CHECK(lines[9] == "9,59/128,4,S5,5,3");
}

TEST_CASE("run pretty prints a figure and the summary on stdout") {
  const CliResult r = run_cli("run --k 2 --algorithm best-fit");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "axis"));
  CHECK(contains(r.out, "chains=8 target=8 width=5 forced=yes"));
}

TEST_CASE("scripted anomalies exit with 2") {
  const CliResult illegal = run_cli("run --k 1 --algorithm scripted:0,0,0");
  CHECK(illegal.exit_code == 2);
  CHECK(contains(illegal.err, "illegal move"));

  const CliResult dry = run_cli("run --k 1 --algorithm scripted:0");
  CHECK(dry.exit_code == 2);
  CHECK(contains(dry.err, "script ran dry"));
}

TEST_CASE("verify k=1 proves the bound") {
  const CliResult r = run_cli("verify --k 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "min forced chains: 5"));
  CHECK(contains(r.out, "every behavior opens at least 5 chains"));

  const CliResult unpruned = run_cli("verify --k 1 --no-prune");
  CHECK(unpruned.exit_code == 0);
  CHECK(contains(unpruned.out, "min forced chains: 5"));
}

TEST_CASE("verify beyond k=1 requires explicit consent") {
  const CliResult r = run_cli("verify --k 2");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.err, "--allow-expensive"));
}

TEST_CASE("verify stops at the node budget with exit 3") {
  CHECK(run_cli("verify --k 1 --node-budget 5").exit_code == 3);
  // The same budget flows in through the environment.
  const CliResult via_env = run_cli("verify --k 1", "", "OLCP_NODE_BUDGET=5");
  CHECK(via_env.exit_code == 3);
  CHECK(contains(via_env.err, "node budget exhausted"));
}

TEST_CASE("batch aggregates across k") {
  const CliResult r =
      run_cli("batch --k-min 1 --k-max 2 --algorithm first-fit --format csv");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "k,games,min_chains,max_chains,target,max_width,all_forced");
  CHECK(lines[1] == "1,1,5,5,5,3,yes");
  CHECK(lines[2] == "2,1,8,8,8,5,yes");

  const CliResult table =
      run_cli("batch --k-min 1 --k-max 1 --algorithm random:5 --trials 3 --seed 9");
  CHECK(table.exit_code == 0);
  CHECK(contains(table.out, "min_chains"));

  // The master seed can come from the environment; the rows must match the
  // flag-provided run exactly.
  const CliResult flag = run_cli(
      "batch --k-min 1 --k-max 1 --algorithm random:5 --trials 3 --seed 77 "
      "--format csv");
  const CliResult env =
      run_cli("batch --k-min 1 --k-max 1 --algorithm random:5 --trials 3 --format csv",
              "", "OLCP_SEED=77");
  CHECK(flag.out == env.out);
}

TEST_CASE("explain narrates every move") {
  const CliResult r = run_cli("explain --k 1 --algorithm first-fit");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "target of 5 chains reached"));
  CHECK(contains(r.out, "chains=5 target=5 width=3 forced=yes"));
}

TEST_CASE("interactive plays a full game from piped decisions") {
  const CliResult r = run_cli("interactive --k 1", "0\n0\n1\n2\n0\n1\n2\n3\n4\n");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "you used 5 chains"));

  // Junk and illegal ids re-prompt instead of ending the game.
  const CliResult messy =
      run_cli("interactive --k 1", "banana\n99\n0\n0\n1\n2\n0\n1\n2\n3\n4\n");
  CHECK(messy.exit_code == 0);
  CHECK(contains(messy.out, "not a chain id: banana"));

  const CliResult eof = run_cli("interactive --k 1", "0\n0\n");
  CHECK(eof.exit_code == 1);
  CHECK(contains(eof.err, "input ended"));
}
