#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <numbers>

#include "pmetric/cli.hpp"
#include "pmetric/error.hpp"

using namespace pmetric;
using namespace pmetric::cli;

namespace {

RunConfig config_for(Command c) {
  RunConfig config;
  config.command = c;
  return config;
}

RunConfig align_config(std::vector<std::string> words) {
  RunConfig config = config_for(Command::align);
  config.space.parameters = {{"alpha", 1}, {"beta", -1}, {"gamma", -2}};
  config.inputs = std::move(words);
  return config;
}

std::string rendered(const RunConfig& config) { return render(run(config).report, "2026-01-01T00:00:00Z"); }

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

}  // namespace

TEST(Report, RoundTrip) {
  Report r;
  r.command = "orbit";
  r.verdict = "pass";
  r.seed = 9;
  r.add("steps", "12");
  r.add("note", "value: with colon");
  r.structured = {{"command", "orbit"}, {"verdict", "pass"}, {"seed", 9}, {"result", {{"x", 1.5}}}};
  const std::string text = render(r, "2026-01-01T00:00:00Z");
  const auto parsed = parse_report(text);
  EXPECT_EQ(parsed.field("command"), "orbit");
  EXPECT_EQ(parsed.field("note"), "value: with colon");
  EXPECT_EQ(parsed.field("seed"), "9");
  EXPECT_EQ(parsed.structured["result"]["x"], 1.5);
  EXPECT_EQ(strip_timestamp(text), strip_timestamp(render(r, "1999-12-31T23:59:59Z")));
  EXPECT_EQ(strip_timestamp(text).find("timestamp"), std::string::npos);
}

TEST(Report, MalformedInput) {
  EXPECT_THROW(parse_report("hello\n"), Error);
  EXPECT_THROW(parse_report(std::string(kReportMagic) + "\ncommand: x\n"), Error);
  Report r;
  r.command = "align";
  r.verdict = "pass";
  r.structured = {{"command", "orbit"}, {"verdict", "pass"}, {"seed", 0}};
  EXPECT_THROW(parse_report(render(r, "t")), Error);
}

TEST(Fasta, Records) {
  const auto recs = read_fasta(">one\nacg\nTT\n\n>two\r\nCA\n", "ACGT");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].first, "one");
  EXPECT_EQ(recs[0].second, "ACGTT");
  EXPECT_EQ(recs[1].second, "CA");
}

TEST(Fasta, Errors) {
  try {
    read_fasta(">x\nACGT\nACNT\n", "ACGT");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_symbol);
    EXPECT_NE(std::string(e.what()).find("line 3, column 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_fasta("ACGT\n", "ACGT"), Error);
}

TEST(Run, AlignExample) {
  const auto res = run(align_config({"CGATC", "CAGA"}));
  EXPECT_EQ(res.exit_code, 0);
  const auto& pair = res.report.structured["result"]["pairs"][0];
  EXPECT_EQ(pair["score"], -2.0);
  EXPECT_EQ(pair["pmetric"], 2.0);
  EXPECT_EQ(pair["witness"][0], "CGATC");
  EXPECT_EQ(pair["witness"][1], "C-AGA");
}

TEST(Run, AlignFastaAndLowercase) {
  auto config = align_config({"cgatc"});
  config.fasta_path = temp_file("words.fa", ">w\nca\nga\n");
  const auto res = run(config);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.report.structured["result"]["pairs"][0]["score"], -2.0);
}

TEST(Run, ConstraintViolationNamesInequality) {
  auto config = align_config({"A", "C"});
  config.space.parameters["beta"] = -3;
  config.space.parameters["gamma"] = -1;
  const auto res = run(config);
  EXPECT_EQ(res.exit_code, 2);
  EXPECT_EQ(res.report.verdict, "error");
  EXPECT_EQ(res.report.structured["result"]["error_code"], "parameter_constraint");
  const std::string msg = res.report.structured["result"]["error"];
  EXPECT_NE(msg.find(">="), std::string::npos) << msg;
}

TEST(Run, UnknownNames) {
  auto config = config_for(Command::orbit);
  config.space.name = "torus";
  config.map = "halving";
  EXPECT_EQ(run(config).exit_code, 2);
  config.space.name = "metric-line";
  config.map = "spiral";
  const auto res = run(config);
  EXPECT_EQ(res.exit_code, 2);
  EXPECT_EQ(res.report.structured["result"]["error_code"], "unknown_name");
}

TEST(Run, PuncturedLineStrongCheck) {
  auto config = config_for(Command::check_axioms);
  config.space.name = "punctured-line";
  config.axioms = {"sssd"};
  config.seed = 7;
  const auto res = run(config);
  EXPECT_EQ(res.exit_code, 1);
  EXPECT_EQ(res.report.verdict, "fail");
  const auto& ax = res.report.structured["result"]["axioms"][0];
  EXPECT_EQ(ax["verdict"], "fail");
  EXPECT_EQ(ax["witness"]["points"][0], "a");
  EXPECT_EQ(ax["witness"]["points"][1], "0");
  EXPECT_EQ(res.report.structured["seed"], 7);
}

TEST(Run, DefaultAxiomSets) {
  for (const std::string name : {"metric-line", "sum-space", "alignment"}) {
    auto config = config_for(Command::check_axioms);
    config.space.name = name;
    const auto res = run(config);
    EXPECT_EQ(res.exit_code, 0) << name;
  }
}

TEST(Run, OrbitWithLimits) {
  auto config = config_for(Command::orbit);
  config.space.name = "punctured-line";
  config.map = "halving";
  config.limit_candidates = {"0", "a"};
  const auto res = run(config);
  EXPECT_EQ(res.exit_code, 0);
  const auto& result = res.report.structured["result"];
  EXPECT_EQ(result["cauchy_verdict"], "cauchy_within_tolerance");
  EXPECT_NEAR(result["r_estimate"].get<double>(), -1.0, 1e-6);
  EXPECT_EQ(result["limits"][0]["verdict"], "special_limit");
  EXPECT_EQ(result["limits"][1]["verdict"], "limit_only");
}

TEST(Run, FixpointExpSinExample) {
  auto config = config_for(Command::fixpoint);
  config.map = "exp_sin";
  config.inputs = {"0"};
  config.variant = "T1.10-2";
  const auto res = run(config);
  const auto& result = res.report.structured["result"];
  const double a = parse_number(result["candidate"].get<std::string>());
  EXPECT_NEAR(a, std::numbers::pi / 2, 5e-8);
  EXPECT_LT(result["residual"].get<double>(), 1e-6);
}

TEST(Run, FixpointAffine) {
  auto config = config_for(Command::fixpoint);
  config.map = "linear:1/2,1";
  config.variant = "T6.4";
  config.starts = {"100"};
  const auto res = run(config);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NEAR(parse_number(res.report.structured["result"]["candidate"].get<std::string>()), 2.0, 1e-8);
}

TEST(Run, MinCheck) {
  auto config = config_for(Command::min_check);
  config.map = "halving";
  config.interval = std::make_pair(0.0, 10.0);
  EXPECT_EQ(run(config).exit_code, 0);
  config.map = "translate:1";
  config.c = 0.9;
  EXPECT_EQ(run(config).exit_code, 1);
}

TEST(Run, SeedIsRecordedAndDeterministic) {
  auto config = config_for(Command::check_axioms);
  config.space.name = "sum-space";
  config.seed = 1234;
  const std::string a = rendered(config);
  EXPECT_EQ(a, rendered(config));
  EXPECT_EQ(parse_report(a).field("seed"), "1234");
  config.seed = 1235;
  EXPECT_NE(a, rendered(config));
}

TEST(Replay, RoundTrips) {
  std::vector<RunConfig> configs;
  configs.push_back(align_config({"CGATC", "CAGA", "GATTACA"}));
  auto axioms = config_for(Command::check_axioms);
  axioms.space.name = "punctured-line";
  axioms.seed = 7;
  configs.push_back(axioms);
  auto fix = config_for(Command::fixpoint);
  fix.map = "halving";
  fix.inputs = {"1"};
  fix.space.name = "punctured-line";
  fix.variant = "T1.9-2";
  configs.push_back(fix);
  for (const auto& config : configs) {
    const std::string text = rendered(config);
    const auto outcome = replay_report(text);
    EXPECT_TRUE(outcome.ok) << to_string(config.command) << ": " << outcome.message;
  }
}

TEST(Replay, DetectsForgedValues) {
  std::string text = rendered(align_config({"CGATC", "CAGA"}));
  auto parsed = parse_report(text);
  parsed.structured["result"]["pairs"][0]["score"] = -1.0;
  Report forged;
  forged.command = "align";
  forged.verdict = "pass";
  forged.structured = parsed.structured;
  EXPECT_FALSE(replay_report(render(forged, "t")).ok);
  EXPECT_FALSE(replay_report("garbage").ok);
}

TEST(Run, ReplayCommand) {
  auto fix = config_for(Command::fixpoint);
  fix.map = "linear:0.5,1";
  const std::string path = temp_file("fix.report", rendered(fix));
  auto replay = config_for(Command::replay);
  replay.report_path = path;
  const auto res = run(replay);
  EXPECT_EQ(res.exit_code, 0) << res.report.structured.dump();
}
