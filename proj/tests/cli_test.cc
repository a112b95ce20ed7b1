#include <cstdlib>
#include <fstream>
#include <map>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "golden_cases.h"
#include "leadinf/deal_view.h"
#include "leadinf/exact.h"

namespace leadinf {
namespace {

using testing::CliResult;
using testing::GoldenCase;
using testing::GoldenCases;

const std::string kGolden = LEADINF_GOLDEN_DIR;
const std::vector<std::string> kInline = {"--declarer", "AQJ8.AKQ2.AKQ.AK", "--dummy",
                                          "6542.JT9.JT9.QJT", "--strain", "NT"};

CliResult RunTool(std::vector<std::string> args) {
  return testing::RunCliCaptured(std::move(args), kGolden);
}

std::vector<std::string> Infer(std::vector<std::string> extra) {
  std::vector<std::string> args = {"infer"};
  args.insert(args.end(), kInline.begin(), kInline.end());
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

// Table rows after the blank line, split on whitespace, keyed by card.
std::map<std::string, std::vector<std::string>> TableRows(const std::string& table) {
  std::map<std::string, std::vector<std::string>> rows;
  std::istringstream in(table.substr(table.find("\n\n") + 2));
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<std::string> cols;
    for (std::string f; fields >> f;) cols.push_back(f);
    rows[cols.at(0)] = cols;
  }
  return rows;
}

class GoldenTest : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenTest, ByteIdentical) {
  const GoldenCase& c = GetParam();
  const CliResult r = RunTool(c.args);
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string path = kGolden + "/" + c.file;
  if (std::getenv("LEADINF_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << r.out;
  }
  EXPECT_EQ(r.out, testing::ReadText(path)) << path;
}

INSTANTIATE_TEST_SUITE_P(Cli, GoldenTest, ::testing::ValuesIn(GoldenCases()),
                         [](const auto& info) {
                           std::string name = info.param.file;
                           for (char& ch : name) {
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           }
                           return name;
                         });

TEST(CliInferTest, WorkedScenarioTable) {
  const CliResult r = RunTool(Infer({"--lead", "SK", "--mode", "within-suit"}));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = TableRows(r.out);
  EXPECT_EQ(rows.at("SK")[2], "1");
  // C(21,11) / (C(21,12) + 4 C(21,11)), reduced.
  const std::string expected = RationalString(Rational(352716, 1704794));
  EXPECT_EQ(expected, "6/29");
  for (const char* card : {"ST", "S9", "S7", "S3"}) EXPECT_EQ(rows.at(card)[2], expected);
  EXPECT_NE(r.out.find("holdings  32\n"), std::string::npos);
  EXPECT_NE(r.out.find("n         5\n"), std::string::npos);
}

TEST(CliInferTest, InlineHandsMatchDealFile) {
  const CliResult a = RunTool(Infer({"--lead", "S3", "--mode", "full"}));
  const CliResult b = RunTool({"infer", "--deal", "{golden}/kt973.deal", "--lead", "S3", "--mode", "full"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliInferTest, TableAndJsonAgree) {
  for (const std::vector<std::string>& extra :
       {std::vector<std::string>{"--lead", "SK"}, {"--lead", "S3", "--mode", "full"},
        {"--lead", "S7"}, {"--lead", "SK", "--mode", "full", "--on-zero", "possession-only"}}) {
    const CliResult table = RunTool(Infer(extra));
    std::vector<std::string> json_args = extra;
    json_args.insert(json_args.end(), {"--format", "json"});
    const CliResult json = RunTool(Infer(json_args));
    ASSERT_EQ(table.code, 0) << table.err;
    ASSERT_EQ(json.code, 0) << json.err;
    const auto rows = TableRows(table.out);
    const auto j = nlohmann::json::parse(json.out);
    std::size_t matched = 0;
    for (const auto& m : j["marginals"]) {
      EXPECT_EQ(rows.at(m["card"].get<std::string>())[2], m["p_exact"].get<std::string>());
      ++matched;
    }
    if (!j["offsuit"].is_null()) {
      EXPECT_EQ(rows.at("offsuit")[2], j["offsuit"]["p_exact"].get<std::string>());
      ++matched;
    }
    EXPECT_EQ(matched, rows.size());
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(j["holdings"], 32);
  }
}

TEST(CliInferTest, MonteCarloIsDeterministic) {
  const auto args = Infer({"--lead", "S3", "--mode", "mc", "--samples", "100000", "--seed", "7"});
  const CliResult a = RunTool(args);
  const CliResult b = RunTool(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(
      RunTool(Infer({"--lead", "S3", "--mode", "mc", "--samples", "100", "--seed", "7", "--format",
                 "json"}))
          .out);
  EXPECT_TRUE(j["marginals"][0]["p_exact"].is_null());
  EXPECT_TRUE(j["marginals"][0].contains("se"));
}

TEST(CliExitCodeTest, Documented) {
  EXPECT_EQ(RunTool(Infer({"--lead", "SK"})).code, cli::kExitOk);
  EXPECT_EQ(RunTool(Infer({"--lead", "S2"})).code, cli::kExitInfeasible);
  EXPECT_EQ(RunTool(Infer({"--lead", "SK", "--mode", "full"})).code, cli::kExitZeroEvidence);
  EXPECT_EQ(RunTool(Infer({"--lead", "SX"})).code, cli::kExitParse);
  EXPECT_EQ(RunTool({"infer", "--declarer", "AQJ8.AKQ2.AKQ", "--dummy", "6542.JT9.JT9.QJT", "--lead",
                 "SK"})
                .code,
            cli::kExitParse);
  EXPECT_EQ(RunTool({"infer", "--declarer", "AQJ8.AKQ2.AKQ.AK", "--dummy", "AQJ8.AKQ2.AKQ.AK",
                 "--lead", "SK"})
                .code,
            cli::kExitParse);
  EXPECT_EQ(RunTool(Infer({"--lead", "SK", "--mode", "mc", "--samples", "10"})).code, cli::kExitUsage);
  EXPECT_EQ(RunTool(Infer({"--lead", "SK", "--seed", "1"})).code, cli::kExitUsage);
  EXPECT_EQ(RunTool(Infer({"--lead", "SK", "--mode", "exact"})).code, cli::kExitUsage);
  EXPECT_EQ(RunTool({"infer", "--lead", "SK"}).code, cli::kExitUsage);
  EXPECT_EQ(RunTool({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(RunTool({}).code, cli::kExitUsage);
  EXPECT_EQ(RunTool({"infer", "--deal", "{golden}/missing.deal", "--lead", "SK"}).code,
            cli::kExitFailure);
  EXPECT_EQ(RunTool({"oracle", "--deal", "{golden}/kt973.deal", "--lead", "SK", "--samples", "2000",
                 "--seed", "1"})
                .code,
            cli::kExitNoSamples);
  EXPECT_EQ(RunTool({"bench", "--n", "14"}).code, cli::kExitUsage);
  EXPECT_EQ(RunTool({"rules", "trace", "AK72.853.QJ4", "NT"}).code, cli::kExitParse);
  EXPECT_EQ(RunTool({"--help"}).code, cli::kExitOk);
}

TEST(CliExitCodeTest, DiagnosticsGoToStderr) {
  const CliResult r = RunTool(Infer({"--lead", "S2"}));
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("S2"), std::string::npos);
}

TEST(CliInferTest, PriorFileErrors) {
  const std::string bad = ::testing::TempDir() + "/bad.prior";
  std::ofstream(bad) << "KQ 1\n";
  EXPECT_EQ(RunTool(Infer({"--lead", "SK", "--prior", bad})).code, cli::kExitParse);
}

TEST(CliBenchTest, PassesBoundAtTen) {
  const CliResult r = RunTool({"bench", "--n", "0,10", "--reps", "1", "--modes", "within-suit"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    std::istringstream fields(line);
    rows.emplace_back();
    for (std::string f; fields >> f;) rows.back().push_back(f);
  }
  ASSERT_EQ(rows.size(), 3u) << r.out;
  EXPECT_EQ(rows[1][1], "prior-only");
  EXPECT_EQ(rows[1][2], "1");
  EXPECT_EQ(rows[2][1], "within-suit");
  EXPECT_EQ(rows[2][2], "1024");
  EXPECT_EQ(rows[2][4], "PASS");
}

TEST(CliDealTest, DealsAreValidAndRepeatable) {
  const CliResult a = RunTool({"deal", "--seed", "1", "--count", "3"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, RunTool({"deal", "--seed", "1", "--count", "3"}).out);
  std::size_t start = 0;
  int deals = 0;
  while (start < a.out.size()) {
    std::size_t end = a.out.find("\n\n", start);
    if (end == std::string::npos) end = a.out.size();
    EXPECT_NO_THROW(ParseDealText(a.out.substr(start, end - start)));
    ++deals;
    start = end + 2;
  }
  EXPECT_EQ(deals, 3);
}

}  // namespace
}  // namespace leadinf
