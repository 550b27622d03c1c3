#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "relaxmatch/instance_io.hpp"
#include "test_util.hpp"

namespace relaxmatch {
namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

// Runs the built binary, capturing stdout; stderr goes to a scratch file so
// diagnostics never interleave with machine-readable output under test.
CommandResult run_cli(const std::string& args) {
  std::string err_path = ::testing::TempDir() + "relaxmatch_cli_stderr.txt";
  std::string command =
      std::string(RELAXMATCH_CLI_PATH) + " " + args + " 2>" + err_path;
  FILE* pipe = popen(command.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  CommandResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::string strictness_path() {
  static std::string path =
      write_temp("cli_strictness.json", instance_to_json(testutil::strictness_instance()));
  return path;
}

TEST(Cli, SolveWritesResultJson) {
  std::string out_path = ::testing::TempDir() + "cli_solve_result.json";
  CommandResult run = run_cli("solve --instance " + strictness_path() +
                              " --guarantee wnh-wb --aggregation total --bound 10 --out " +
                              out_path);
  ASSERT_EQ(run.exit_code, 0);
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(read_text_file(out_path));
  EXPECT_EQ(doc["allocation_size"], 2);
  EXPECT_EQ(doc["relaxation"].size(), 2u);
  EXPECT_EQ(doc["guarantee"], "wnh-wb");
}

TEST(Cli, SolveBoundZeroSizeGivesEmptyAdvice) {
  CommandResult run = run_cli("solve --instance " + strictness_path() +
                              " --guarantee wnh-wb --aggregation size --bound 0");
  ASSERT_EQ(run.exit_code, 0);
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(run.output);
  EXPECT_TRUE(doc["relaxation"].empty());
  EXPECT_EQ(doc["aggregate_cost"], "0");
}

TEST(Cli, SolveVerifyAttachesReport) {
  CommandResult run = run_cli("solve --instance " + strictness_path() +
                              " --guarantee snh-sb --bound 10 --verify");
  ASSERT_EQ(run.exit_code, 0);
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(run.output);
  ASSERT_TRUE(doc.contains("guarantee_report"));
  EXPECT_EQ(doc["guarantee_report"]["passed"], true);
  EXPECT_EQ(doc["guarantee_report"]["oracle"]["mu_optimal"], true);
}

TEST(Cli, GammaPrintsGuaranteedAgents) {
  // Classic chain: y1 contested, y2 reachable only through x2.
  Instance inst = testutil::make_instance(
      {"x1", "x2"}, {"y1", "y2"}, {{"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}}, {});
  std::string path = write_temp("cli_gamma.json", instance_to_json(inst));
  CommandResult fast = run_cli("gamma --instance " + path);
  ASSERT_EQ(fast.exit_code, 0);
  EXPECT_EQ(fast.output, "x1\nx2\n");
  CommandResult brute = run_cli("gamma --instance " + path + " --bruteforce");
  EXPECT_EQ(brute.output, fast.output);
}

TEST(Cli, OraclePrintsVerdict) {
  CommandResult run = run_cli("oracle --instance " + strictness_path() +
                              " --guarantee wnh-wb --aggregation total --bound 10");
  ASSERT_EQ(run.exit_code, 0);
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(run.output);
  EXPECT_EQ(doc["best_mu"], 2);
}

TEST(Cli, GenIsDeterministicPerSeed) {
  CommandResult first = run_cli("gen --profile lab --seed 7 --agents 9 --resources 5");
  CommandResult second = run_cli("gen --profile lab --seed 7 --agents 9 --resources 5");
  CommandResult third = run_cli("gen --profile lab --seed 8 --agents 9 --resources 5");
  ASSERT_EQ(first.exit_code, 0);
  EXPECT_EQ(first.output, second.output);
  EXPECT_NE(first.output, third.output);
  Instance parsed = validate_instance(parse_instance_data(first.output));
  EXPECT_EQ(parsed.agent_count(), 9u);
}

TEST(Cli, SeedEnvOverridesFlag) {
  CommandResult flagged = run_cli("gen --profile lab --seed 7 --agents 6 --resources 4");
  CommandResult overridden =
      run_cli("gen --profile lab --seed 99 --agents 6 --resources 4");
  ASSERT_NE(flagged.output, overridden.output);
  setenv("RELAXMATCH_SEED", "7", 1);
  CommandResult via_env = run_cli("gen --profile lab --seed 99 --agents 6 --resources 4");
  unsetenv("RELAXMATCH_SEED");
  EXPECT_EQ(via_env.output, flagged.output);
}

TEST(Cli, SweepEmitsCsvGrid) {
  CommandResult run = run_cli("sweep --instance " + strictness_path() +
                              " --guarantees snh-sb,wnh-wb --bounds 0:2:1 --reps 2 --seed 1");
  ASSERT_EQ(run.exit_code, 0);
  std::size_t lines = 0;
  for (char c : run.output) lines += c == '\n';
  // Header + 2 guarantees x 3 bounds x (2 raw + 1 aggregate).
  EXPECT_EQ(lines, 1u + 2u * 3u * 3u);
  EXPECT_EQ(run.output.rfind("guarantee,aggregation,bound,replication,", 0), 0u);
}

TEST(Cli, SimulateEmitsHarmColumn) {
  CommandResult run = run_cli("simulate --instance " + strictness_path() +
                              " --guarantees wnh-wb --compliance 0:1:0.5 --reps 2 --seed 1");
  ASSERT_EQ(run.exit_code, 0);
  EXPECT_NE(run.output.find(",harm_audit"), std::string::npos);
}

TEST(Cli, ExitCodesFollowTheContract) {
  EXPECT_EQ(run_cli("").exit_code, 1);                        // no subcommand
  EXPECT_EQ(run_cli("solve --nope 1").exit_code, 1);          // unknown flag
  EXPECT_EQ(run_cli("frobnicate").exit_code, 1);              // unknown subcommand
  EXPECT_EQ(run_cli("--help").exit_code, 0);

  std::string bad_json = write_temp("cli_bad.json", "{not json");
  EXPECT_EQ(run_cli("solve --instance " + bad_json).exit_code, 2);

  std::string overlap = write_temp("cli_overlap.json", R"({
    "agents": [{"id": "x1"}],
    "resources": [{"id": "y1"}],
    "compatible": [["x1", "y1"]],
    "relaxable": [{"agent": "x1", "resource": "y1", "discomfort": "1"}]
  })");
  EXPECT_EQ(run_cli("solve --instance " + overlap).exit_code, 2);

  EXPECT_EQ(run_cli("solve --instance " + strictness_path() + " --guarantee nope").exit_code, 2);
  EXPECT_EQ(run_cli("solve --instance " + strictness_path() + " --bound -1").exit_code, 2);

  // 13 relaxable self-edges: the oracle cap trips.
  InstanceData data;
  for (int i = 0; i < 13; ++i) {
    data.agents.push_back({"x" + std::to_string(10 + i), 1});
    data.resources.push_back({"y" + std::to_string(10 + i), 1});
    data.relaxable.push_back(
        {"x" + std::to_string(10 + i), "y" + std::to_string(10 + i), Rational(1)});
  }
  std::string wide = write_temp("cli_wide.json", instance_to_json(validate_instance(data)));
  EXPECT_EQ(run_cli("oracle --instance " + wide).exit_code, 3);
}

TEST(Cli, OutputFilesRoundTripThroughLoaders) {
  std::string gen_path = ::testing::TempDir() + "cli_roundtrip_instance.json";
  ASSERT_EQ(run_cli("gen --profile course --seed 5 --agents 10 --resources 8 --out " + gen_path)
                .exit_code,
            0);
  Instance inst = load_instance(gen_path);
  EXPECT_EQ(inst.agent_count(), 10u);
  EXPECT_EQ(instance_to_json(inst), read_text_file(gen_path));
}

}  // namespace
}  // namespace relaxmatch
