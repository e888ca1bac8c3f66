#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qseries/catalog.hpp"
#include "qseries_cli/cli.hpp"
#include "qseries_cli/json_io.hpp"

using namespace qseries;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(CliVerify, PassesFirstIdentity) {
  const Invocation r = run({"verify", "--id", "1.1", "--digits", "100"});
  EXPECT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_NE(r.out.find("1.1"), std::string::npos);
  EXPECT_NE(r.out.find("verified"), std::string::npos);
}

TEST(CliVerify, ApproximationReportsItsDigits) {
  const Invocation r = run({"verify", "--id", "2.27", "--digits", "200", "--json"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["results"][0]["digits_agree"].get<double>(), 4.55, 0.01);
}

TEST(CliVerify, FlaggedEntriesStillSucceed) {
  const Invocation r = run({"verify", "--id", "2.20,2.21"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '!'), 2) << r.out;
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(run({"verify", "--id", "nope"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "--digits", "20"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "--digits", "abc"}).code, cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(run({}).code, cli::kUsageError);
}

TEST(CliVerify, FailureExitCode) {
  const std::string path = ::testing::TempDir() + "qseries_cli_broken.txt";
  {
    std::ofstream out(path);
    out << "1.1 | exact | wrong | printed | pi | linear | 73 * lambert(1, 1); -96 * lambert(1, 2); 24 * lambert(1, 4)\n";
  }
  const Invocation r = run({"verify", "--catalog", path});
  EXPECT_EQ(r.code, cli::kVerificationFailed);
  EXPECT_NE(r.out.find("failed"), std::string::npos);
  std::remove(path.c_str());
}

TEST(CliVerify, JsonReportsRoundTrip) {
  const Invocation r = run({"verify", "--id", "1.1,2.20,2.32", "--digits", "60", "--json"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], cli::kSchemaVersion);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["config"]["digits"], 60);
  ASSERT_EQ(j["results"].size(), 3u);
  for (const json& item : j["results"]) {
    const VerificationReport report = item.get<VerificationReport>();
    EXPECT_EQ(json(report), item);
    EXPECT_TRUE(item["lhs"]["decimal"].is_string());
  }
  EXPECT_TRUE(j["results"][1]["flagged"].get<bool>());
  EXPECT_EQ(j["results"][2]["expected_digits"], 173);
}

TEST(CliVerify, ThreadedOutputIsDeterministic) {
  const Invocation serial = run({"verify", "--digits", "50"});
  const Invocation threaded = run({"verify", "--digits", "50", "--threads", "3"});
  ASSERT_EQ(serial.code, cli::kSuccess);
  const auto strip_times = [](const std::string& text) {
    std::vector<std::string> out;
    for (const std::string& line : lines(text)) out.push_back(line.substr(0, line.find("digits")));
    return out;
  };
  EXPECT_EQ(strip_times(serial.out), strip_times(threaded.out));
}

TEST(CliEval, NearIntegerAtTwoSevenths) {
  const Invocation r = run({"eval", "--family", "lambert", "--s", "-3", "--alpha", "2/7", "--digits", "40"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_NE(r.out.find("10.0000000000000001901617678886626"), std::string::npos) << r.out;
}

TEST(CliEval, EisensteinAtOneTenth) {
  const Invocation r = run(
      {"eval", "--family", "eisenstein", "--weight", "4", "--alpha", "1/10", "--convention", "pi", "--digits", "40"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_NE(r.out.find("10000.000000000000000000001237896"), std::string::npos) << r.out;
}

TEST(CliEval, SpecTextAndJson) {
  const Invocation r = run({"eval", "--spec", "F(4)", "--digits", "30", "--json"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["results"][0]["spec"], "F(4)");
  EXPECT_EQ(j["results"][0]["text"].get<std::string>().substr(0, 20), "1.000003487366679449");
  Real value(64);
  from_json(j["results"][0]["value"], value);
  json back;
  to_json(back, value);
  EXPECT_EQ(back, j["results"][0]["value"]);
}

TEST(CliEval, UsageErrors) {
  EXPECT_EQ(run({"eval", "--family", "lambert", "--s", "1", "--alpha", "0"}).code, cli::kUsageError);
  EXPECT_EQ(run({"eval", "--family", "lambert", "--s", "1", "--alpha", "0.5"}).code, cli::kUsageError);
  EXPECT_EQ(run({"eval", "--family", "zeta", "--alpha", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"eval", "--family", "eisenstein", "--weight", "6", "--alpha", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"eval", "--family", "eisenstein", "--alpha", "1", "--convention", "tau"}).code, cli::kUsageError);
  EXPECT_EQ(run({"eval", "--spec", "lambert(1"}).code, cli::kUsageError);
}

TEST(CliHunt, SeventhHit) {
  const Invocation r = run({"hunt", "--s", "-3", "--farey", "7", "--threshold", "12"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const auto out = lines(r.out);
  ASSERT_GE(out.size(), 2u);
  EXPECT_EQ(out[1].substr(0, 4), "1/7 ");
}

TEST(CliHunt, EmptyAtOrderTwo) {
  const Invocation r = run({"hunt", "--s", "-3", "--farey", "2", "--threshold", "12"});
  ASSERT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(lines(r.out).size(), 1u);
}

TEST(CliHunt, JsonRoundTrip) {
  const Invocation r = run({"hunt", "--s", "-3", "--farey", "12", "--threshold", "10", "--json"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const json j = json::parse(r.out);
  ASSERT_FALSE(j["results"].empty());
  for (const json& item : j["results"]) EXPECT_EQ(json(item.get<NearHit>()), item);
  double previous = 1e9;
  for (const json& item : j["results"]) {
    EXPECT_LE(item["nearness_digits"].get<double>(), previous);
    previous = item["nearness_digits"].get<double>();
  }
}

TEST(CliHunt, UsageErrors) {
  EXPECT_EQ(run({"hunt", "--s", "-5", "--farey", "7"}).code, cli::kUsageError);
  EXPECT_EQ(run({"hunt", "--s", "-3", "--farey", "0"}).code, cli::kUsageError);
  EXPECT_EQ(run({"hunt", "--s", "-3"}).code, cli::kUsageError);
}

TEST(CliPartition, OracleLastLine) {
  const Invocation r = run({"partition", "--n", "200", "--method", "oracle"});
  ASSERT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(lines(r.out).back(), "200 3972999029388");
}

TEST(CliPartition, ExpansionMatchesOracle) {
  const Invocation expansion = run({"partition", "--n", "200", "--method", "expansion", "--digits", "2850"});
  const Invocation oracle = run({"partition", "--n", "200", "--method", "oracle"});
  ASSERT_EQ(expansion.code, cli::kSuccess) << expansion.err;
  auto rows = lines(expansion.out);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.front().substr(0, 11), "# checksum ");
  rows.erase(rows.begin());
  EXPECT_EQ(rows, lines(oracle.out));
}

TEST(CliPartition, JsonRoundTrip) {
  const Invocation r = run({"partition", "--n", "30", "--json"});
  ASSERT_EQ(r.code, cli::kSuccess);
  const json j = json::parse(r.out);
  ASSERT_EQ(j["results"].size(), 31u);
  for (const json& item : j["results"]) EXPECT_EQ(json(item.get<cli::PartitionRow>()), item);
  EXPECT_EQ(j["results"][30]["p"], "5604");
}

TEST(CliPartition, Estimate) {
  const Invocation r = run({"partition", "--n", "200", "--method", "estimate"});
  ASSERT_EQ(r.code, cli::kSuccess);
  EXPECT_NE(r.out.find("ratio 1.06896876"), std::string::npos) << r.out;
}

TEST(CliPartition, UsageErrors) {
  EXPECT_EQ(run({"partition", "--n", "206", "--method", "expansion"}).code, cli::kUsageError);
  EXPECT_EQ(run({"partition", "--n", "20", "--method", "expansion", "--digits", "2800"}).code, cli::kUsageError);
  EXPECT_EQ(run({"partition", "--n", "20", "--method", "guess"}).code, cli::kUsageError);
  EXPECT_EQ(run({"partition", "--n", "1", "--method", "estimate"}).code, cli::kUsageError);
}

TEST(CliRelation, Template) {
  const Invocation r = run({"relation", "--template", "1.1"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_EQ(r.out, "-1, 72, -96, 24\n");
}

TEST(CliRelation, Values) {
  EXPECT_EQ(run({"relation", "--values", "1,2"}).out, "2, -1\n");
  const Invocation series = run({"relation", "--values", "pi, lambert(1, 1), lambert(1, 2), lambert(1, 4)"});
  EXPECT_EQ(series.out, "1, -72, 96, -24\n");
}

TEST(CliRelation, NoRelation) {
  const Invocation r = run({"relation", "--values", "π,√2", "--max-coeff", "3"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_EQ(r.out.substr(0, 11), "NO-RELATION");
}

TEST(CliRelation, JsonRoundTrip) {
  const Invocation found = run({"relation", "--values", "1,2", "--json"});
  const json a = json::parse(found.out)["results"][0];
  EXPECT_EQ(json(a.get<Relation>()), a);
  const Invocation none = run({"relation", "--values", "1,sqrt(2),sqrt(3)", "--json"});
  const json b = json::parse(none.out)["results"][0];
  EXPECT_FALSE(b["relation"].get<bool>());
  EXPECT_EQ(json(b.get<NoRelation>()), b);
}

TEST(CliRelation, ExitCodes) {
  EXPECT_EQ(run({"relation", "--values", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"relation"}).code, cli::kUsageError);
  EXPECT_EQ(run({"relation", "--values", "1,2", "--template", "1.1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"relation", "--template", "2.27"}).code, cli::kUsageError);
  EXPECT_EQ(run({"relation", "--values", "1,bogus"}).code, cli::kUsageError);
  EXPECT_EQ(run({"relation", "--values", "1,phi", "--max-coeff", "34", "--digits", "100"}).code,
            cli::kPrecisionTooLow);
}

TEST(CliCatalog, PrintsAndReloads) {
  const Invocation r = run({"catalog"});
  ASSERT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(parse_catalog(r.out), builtin_registry());

  const std::string path = ::testing::TempDir() + "qseries_cli_catalog.txt";
  ASSERT_EQ(run({"catalog", "--output", path}).code, cli::kSuccess);
  const Invocation verify = run({"verify", "--id", "1.4", "--catalog", path});
  EXPECT_EQ(verify.code, cli::kSuccess) << verify.err;
  std::remove(path.c_str());
  EXPECT_EQ(run({"catalog", "--catalog", path}).code, cli::kUsageError);
}

TEST(SplitTopLevel, KeepsParenthesesTogether) {
  EXPECT_EQ(cli::split_top_level("pi, lambert(1, 1),  2 "),
            (std::vector<std::string>{"pi", "lambert(1, 1)", "2"}));
}
