#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "support.hpp"

using namespace tiercode;
using namespace tiercode::cli;
using tiercode::testing::config_path;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::string& cmd, CommandOptions opt) {
  std::ostringstream out, err;
  const int code = run_command(cmd, opt, out, err);
  return {code, out.str(), err.str()};
}

CommandOptions with_config(const std::string& name) {
  CommandOptions opt;
  opt.config_path = config_path(name);
  return opt;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tiercode_cli_test_" + name);
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, VerifyLemmasOnFixtures) {
  for (const char* name : {"kk_example.json", "mv1.json", "mv2_compressed.json", "mv2_uncompressed.json",
                           "gabidulin_gf8.json"}) {
    const auto r = run("verify-lemmas", with_config(name));
    EXPECT_EQ(r.code, kExitOk) << name << "\n" << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["result"]["all_pass"].get<bool>());
    EXPECT_EQ(j["tool"]["name"], "tiercode");
    EXPECT_TRUE(j.contains("config"));
  }
}

TEST(Cli, VerifyLemmasReportsMeasuredValues) {
  const auto r = run("verify-lemmas", with_config("kk_example.json"));
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["code"]["union_size"], 25);
  EXPECT_EQ(j["result"]["code"]["union_min_distance"], 1);
  bool saw = false;
  for (const auto& c : j["result"]["checks"])
    if (c["id"] == "kk.union_count") {
      saw = true;
      EXPECT_EQ(c["measured"], 25);
    }
  EXPECT_TRUE(saw);
}

TEST(Cli, LemmaFailureExitsOne) {
  auto doc = nlohmann::json::parse(std::ifstream(config_path("kk_gf16.json")));
  doc["code"]["rs_construction"] = true;
  const auto path = temp_file("rs_fail.json");
  write(path, doc.dump());
  CommandOptions opt;
  opt.config_path = path.string();
  EXPECT_EQ(run("verify-lemmas", opt).code, kExitLemmaFailure);
}

TEST(Cli, DependentAlphasAreConfigErrors) {
  auto doc = nlohmann::json::parse(std::ifstream(config_path("kk_example.json")));
  doc["code"]["alphas"] = {"g^3", "g^3"};
  const auto path = temp_file("dependent.json");
  write(path, doc.dump());
  CommandOptions opt;
  opt.config_path = path.string();
  const auto r = run("verify-lemmas", opt);
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ConfigErrors) {
  EXPECT_THROW((void)parse_config_text("{"), ConfigError);
  EXPECT_THROW((void)parse_config_text(R"({"field": {"p": 2, "n": 3}})"), ConfigError);
  EXPECT_THROW((void)parse_config_text(R"({"field": {"p": 2, "n": 3}, "code": {"kind": "rs"}})"), ConfigError);
  EXPECT_THROW(
      (void)parse_config_text(
          R"({"field": {"p": 2, "n": 3}, "code": {"kind": "kk", "q": 2, "m": 3, "l": 2, "k": 1, "alphas": ["g^3", "g^4"]}, "bogus": 1})"),
      ConfigError);
  EXPECT_THROW((void)parse_config_text(
                   R"({"field": {"p": 2, "n": 5}, "code": {"kind": "kk", "q": 2, "m": 5, "l": 1, "k": 1, "alphas": ["g^1"]}})"),
               ConfigError);  // no built-in modulus
  CommandOptions missing;
  missing.config_path = "/nonexistent/config.json";
  EXPECT_EQ(run("analyze-distances", missing).code, kExitConfig);
  EXPECT_EQ(run("no-such-command", with_config("mv1.json")).code, kExitConfig);
}

TEST(Cli, BudgetExceededExitsThree) {
  auto doc = nlohmann::json::parse(std::ifstream(config_path("kk_example.json")));
  doc["union"] = {{"budget", 10}};
  const auto path = temp_file("budget.json");
  write(path, doc.dump());
  CommandOptions opt;
  opt.config_path = path.string();
  EXPECT_EQ(run("verify-lemmas", opt).code, kExitBudget);
}

TEST(Cli, EncodeDecodeRoundTrip) {
  const auto rows = temp_file("rows.txt");
  auto opt = with_config("kk_example.json");
  opt.message = "g^2";
  opt.rows_out = rows.string();
  const auto enc = run("encode", opt);
  ASSERT_EQ(enc.code, kExitOk) << enc.err;
  const auto ej = nlohmann::json::parse(enc.out);
  const auto index = ej["result"]["codewords"][0]["index"].get<std::size_t>();

  auto dopt = with_config("kk_example.json");
  dopt.packets_path = rows.string();
  const auto dec = run("decode", dopt);
  ASSERT_EQ(dec.code, kExitOk) << dec.err;
  const auto dj = nlohmann::json::parse(dec.out);
  EXPECT_EQ(dj["result"]["chosen"].get<std::size_t>(), index);
  EXPECT_EQ(dj["result"]["metric_value"], 0);
  EXPECT_EQ(dj["result"]["message"], "001");
  EXPECT_EQ(dj["result"]["verdicts"].size(), 2u);
}

TEST(Cli, DecodeEmptyPacketFileIsUsageError) {
  const auto empty = temp_file("empty.txt");
  write(empty, "# nothing here\n\n");
  auto opt = with_config("mv1.json");
  opt.packets_path = empty.string();
  EXPECT_EQ(run("decode", opt).code, kExitConfig);
  opt.packets_path.clear();
  EXPECT_EQ(run("decode", opt).code, kExitConfig);
}

TEST(Cli, DecodeCorrectsSingleFlip) {
  const auto pk = temp_file("flip.txt");
  write(pk, "011111111\n");
  auto opt = with_config("mv1.json");
  opt.packets_path = pk.string();
  const auto r = run("decode", opt);
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["chosen"], 1);
  EXPECT_EQ(j["result"]["verdicts"][0]["outcome"], "corrected");
  EXPECT_EQ(j["result"]["verdicts"][0]["vector"], "111111111");
}

TEST(Cli, EncodeWholeCodebookCsv) {
  auto opt = with_config("mv1.json");
  opt.all_codewords = true;
  opt.format = Format::csv;
  const auto r = run("encode", opt);
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "index,message,row,packet\n0,000,0,111000000\n1,100,0,111111111\n");
}

TEST(Cli, SimulateIsReproducible) {
  auto opt = with_config("sim_diamond_mv1.json");
  opt.trials = 200;
  const auto a = run("simulate", opt);
  const auto b = run("simulate", opt);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  opt.seed = 5;
  const auto c = run("simulate", opt);
  EXPECT_NE(a.out, c.out);
  opt.format = Format::csv;
  const auto csv = run("simulate", opt);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 4);
}

TEST(Cli, SimulateWithoutTopologyIsConfigError) {
  EXPECT_EQ(run("simulate", with_config("mv1.json")).code, kExitConfig);
}

TEST(Cli, AnalyzeDistances) {
  const auto r = run("analyze-distances", with_config("mv2_compressed.json"));
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out)["result"];
  EXPECT_EQ(j["union_min_distance"], 3);
  EXPECT_EQ(j["ambient_length"], 21);
  EXPECT_EQ(j["components"][0]["min_distance"], 3);
  EXPECT_EQ(j["components"][1]["min_distance"], 9);
}
