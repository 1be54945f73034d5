#include <cohinv/cli.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using cohinv::Json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cohinv::run(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// status and stdout of the installed binary
std::pair<int, std::string> run_binary(const std::string& args) {
  const std::string cmd = std::string(COHINV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WEXITSTATUS(raw), out};
}

}  // namespace

TEST(Cli, DescribeSl8Mod2Json) {
  const Result r = run_cli({"describe", "sl", "--n", "8", "--m", "2", "--json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["group"], "SL_8/μ_2");
  EXPECT_EQ(j["ell"], 1);
  EXPECT_EQ(j["n_g"], 2);
  EXPECT_EQ(j["inv_ind_order"], 2);
  EXPECT_EQ(j["inv_dec"], "F^×/F^{×2}");
  for (const auto& c : j["crosschecks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
}

TEST(Cli, SchemaKeyOrder) {
  const Json j = Json::parse(run_cli({"describe", "hspin", "--rank", "16", "--format", "json", "--trace"}).out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  const std::vector<std::string> expected{"group",          "params",   "ell",          "n_g",
                                          "q_group",        "dec_group", "inv_dec",     "inv_ind_order",
                                          "inv_ind_presentation", "crosschecks", "split_note", "trace"};
  EXPECT_EQ(keys, expected);
  EXPECT_EQ(j["split_note"], "F^×/F^{×2} ⊕ Z/4Z");
}

TEST(Cli, GoldenReports) {
  EXPECT_EQ(run_cli({"describe", "sl", "--n", "8", "--m", "2", "--json"}).out,
            read_file(std::string(COHINV_GOLDEN_DIR) + "/describe_sl_8_2.json"));
  EXPECT_EQ(run_cli({"describe", "hspin", "--rank", "16", "--json", "--trace"}).out,
            read_file(std::string(COHINV_GOLDEN_DIR) + "/describe_hspin_16.json"));
  EXPECT_EQ(run_cli({"describe", "sl", "--n", "9", "--m", "3"}).out,
            read_file(std::string(COHINV_GOLDEN_DIR) + "/describe_sl_9_3.md"));
  EXPECT_EQ(run_cli({"restrict", "--rank", "16", "--json"}).out,
            read_file(std::string(COHINV_GOLDEN_DIR) + "/restrict_16.json"));
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"table", "sl", "--p", "2", "--r", "1", "--max-n", "16", "--json"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, MarkdownColumns) {
  const Result r = run_cli({"describe", "sl", "--n", "8", "--m", "2"});
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("| group | ℓ | n_G | Inv³_dec | Inv³_ind | presentation | checks |"), std::string::npos);
  EXPECT_NE(r.out.find("| SL_8/μ_2 | 1 | 2 | F^×/F^{×2} | Z/2Z | (Z/2Z)q | 8/8 |"), std::string::npos);
}

TEST(Cli, MDoesNotDivideN) {
  const Result r = run_cli({"describe", "sl", "--n", "8", "--m", "3"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("m must divide n"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, InvalidInputs) {
  EXPECT_EQ(run_cli({"describe", "hspin", "--rank", "10"}).status, 2);
  EXPECT_EQ(run_cli({"describe", "hspin", "--rank", "4"}).status, 2);
  EXPECT_EQ(run_cli({"describe", "sc", "--type", "D", "--rank", "3"}).status, 2);
  EXPECT_EQ(run_cli({"describe", "sl", "--n", "8", "--m", "2", "--height", "1"}).status, 2);
  EXPECT_EQ(run_cli({"table", "sl", "--p", "4", "--r", "1"}).status, 2);
  EXPECT_EQ(run_cli({"table", "sl"}).status, 2);
  EXPECT_EQ(run_cli({"restrict", "--rank", "6"}).status, 2);
}

TEST(Cli, MalformedFlagsPrintUsage) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"frobnicate"}, {"describe"}, {"describe", "sl", "--n", "eight"}, {"verify", "--suite", "nope"}}) {
    const Result r = run_cli(args);
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
  }
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}).status, 0); }

TEST(Cli, Tables) {
  const Result r = run_cli({"table", "hspin", "--max-n", "8", "--json"});
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 7u);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(run_cli({"table", "sl", "--p", "3", "--r", "2", "--max-n", "27"}).status, 0);
}

TEST(Cli, Restrict) {
  const Json j = Json::parse(run_cli({"restrict", "--rank", "16", "--json"}).out);
  EXPECT_EQ(j["rost_multiplier"], 1);
  EXPECT_EQ(j["image_of_generator"], 1);
  EXPECT_TRUE(j["generator_to_generator"].get<bool>());
  const Json six = Json::parse(run_cli({"restrict", "--rank", "24", "--json"}).out);
  EXPECT_EQ(six["image_of_generator"], 0);
}

TEST(Cli, VerifySingleSuite) {
  const Result r = run_cli({"verify", "--suite", "restrict", "--json"});
  EXPECT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_GT(j["checks"].get<long>(), 0);
}

TEST(CliBinary, VerifyAll) {
  const auto [status, out] = run_binary("verify --suite all --max-n 30 --height 4");
  EXPECT_EQ(status, 0);
  EXPECT_NE(out.find(" 0 failed"), std::string::npos);
}

TEST(CliBinary, ExitStatuses) {
  EXPECT_EQ(run_binary("describe sl --n 8 --m 3").first, 2);
  EXPECT_EQ(run_binary("--bogus").first, 2);
  const auto [status, out] = run_binary("describe sl --n 8 --m 2 --json");
  EXPECT_EQ(status, 0);
  EXPECT_EQ(out, read_file(std::string(COHINV_GOLDEN_DIR) + "/describe_sl_8_2.json"));
}
