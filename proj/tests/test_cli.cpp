#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fplab/cli/commands.hpp"
#include "fplab/cli/diagram.hpp"
#include "fplab/cli/fixtures.hpp"
#include "fplab/errors.hpp"

namespace fplab::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "fplab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--json", "-"});
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

VerifyOptions verify_opts(Target t, std::string config = "", std::uint64_t seed = 0) {
  VerifyOptions o;
  o.target = std::move(t);
  o.config = std::move(config);
  o.seed = seed;
  return o;
}

TEST(ParseIntList, AcceptsAndRejects) {
  EXPECT_EQ(parse_int_list("2,4,5"), (std::vector<int>{2, 4, 5}));
  EXPECT_EQ(parse_int_list(" 7 "), std::vector<int>{7});
  EXPECT_THROW(parse_int_list(""), ValidationError);
  EXPECT_THROW(parse_int_list("1,,2"), ValidationError);
  EXPECT_THROW(parse_int_list("1,a"), ValidationError);
  EXPECT_THROW(parse_int_list("1,2,"), ValidationError);
}

TEST(CtShape, FromDeltaH) {
  EXPECT_EQ(ct_shape_from_delta_h({1, 2, 3}), std::pair(4, 0));
  EXPECT_EQ(ct_shape_from_delta_h({1, 2, 3, 2}), std::pair(4, 2));
  EXPECT_EQ(ct_shape_from_delta_h({1}), std::pair(2, 0));
  EXPECT_THROW(ct_shape_from_delta_h({1, 2, 5}), ValidationError);
  EXPECT_THROW(ct_shape_from_delta_h({1, 3}), ValidationError);
}

TEST(Report, SettleAndExitCodes) {
  RunReport r;
  r.settle();
  EXPECT_EQ(r.verdict, Verdict::NotApplicable);
  r.check("a", 1, 1);
  r.settle();
  EXPECT_EQ(r.verdict, Verdict::Match);
  r.check("b", 1, 2, true);
  r.settle();
  EXPECT_EQ(r.verdict, Verdict::ExpectedNonunique);
  EXPECT_EQ(r.exit_code(), kExitMatch);
  r.check("c", 1, 2);
  r.settle();
  EXPECT_EQ(r.verdict, Verdict::Mismatch);
  EXPECT_EQ(r.exit_code(), kExitMismatch);
}

TEST(Report, JsonRoundTrip) {
  for (const auto& r : {cmd_verify(verify_opts({.type = TypeVector2{2, 4, 5}, .double_points = true})),
                        cmd_verify(verify_opts({.pseudo = PseudoTypeVector{1, 1, 2, 2}}, "generic", 7)),
                        cmd_verify(verify_opts({}, "cubic", 2)), cmd_predict({{.type = TypeVector2{1, 3}}}),
                        cmd_extremal({.t = 3, .r = 1, .trials = 5})}) {
    const auto text = emit(r);
    const auto back = parse_report(text);
    EXPECT_EQ(back, r) << r.command;
    EXPECT_EQ(emit(back), text);
    EXPECT_EQ(json::parse(text).at("schema"), "fplab-1");
  }
  EXPECT_THROW(parse_report(R"({"schema":"other"})"), ValidationError);
}

TEST(Report, ConfigurationJsonKeepsRationals) {
  const auto c = config_from_points({ProjPoint(Rational(1, 2), Rational(-7, 3), Rational(1)), ProjPoint(1L, 0L, 0L)});
  const auto j = to_json(c);
  EXPECT_EQ(configuration_from_json(j), c);
  bool fractional = false;
  for (const auto& p : j["points"]) {
    for (const auto& x : p["coords"]) fractional = fractional || x.get<std::string>().find("/1") == std::string::npos;
  }
  EXPECT_TRUE(fractional);
  const auto lin = doubled(spread_out_config({2, 4, 5}));
  EXPECT_EQ(configuration_from_json(to_json(lin)), lin);
}

TEST(Fixtures, ParseAndLookup) {
  const auto& f = builtin_fixture("ex-2-4-5");
  EXPECT_EQ(f.ints("beta1"), (std::vector<int>{6, 7, 7, 7, 9, 10}));
  EXPECT_EQ(f.longs("hf").back(), 33);
  EXPECT_FALSE(f.location.empty());
  EXPECT_THROW(builtin_fixture("nope"), ValidationError);
  for (const auto& id : reproduce_ids()) EXPECT_NO_THROW(builtin_fixture(id)) << id;
  EXPECT_NE(builtin_fixture_text().find("# format: 1"), std::string_view::npos);

  const auto parsed = parse_fixtures("[a]\nlocation = here\nx = 1, 2\n");
  EXPECT_EQ(parsed.at("a").ints("x"), (std::vector<int>{1, 2}));
  EXPECT_THROW(parse_fixtures("x = 1\n"), ValidationError);
  EXPECT_THROW(parse_fixtures("[a]\nno equals sign\n"), ValidationError);
}

TEST(Diagram, MacaulayLayout) {
  const auto text = macaulay_diagram(BettiTable({6, 7, 7, 7, 9, 10}, {8, 8, 9, 10, 11}));
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_EQ(lines[0], "total:     1     6     5");
  EXPECT_EQ(lines[2], "    0:     1     -     -");
  EXPECT_EQ(lines[7], "    5:     -     1     -");
  EXPECT_EQ(lines[8], "    6:     -     3     2");
  EXPECT_EQ(lines[11], "    9:     -     1     1");
}

TEST(Predict, Examples) {
  const auto a = run_json({"predict", "--type", "2,4,5", "--double"});
  EXPECT_EQ(a["predictions"]["hf_unique"], true);
  EXPECT_EQ(a["predictions"]["delta_h"], json({1, 2, 3, 4, 5, 6, 6, 3, 2, 1}));
  const auto b = run_json({"predict", "--pseudo", "3,6,6,7,12,14"});
  EXPECT_EQ(b["predictions"]["delta_h"], json({1, 2, 3, 4, 5, 6, 6, 6, 5, 3, 2, 2, 2, 1}));
  const auto c = run_json({"predict", "--type", "1"});
  EXPECT_EQ(c["predictions"]["delta_h"], json({1}));
  EXPECT_EQ(c["oracle_results"], nullptr);
}

TEST(Verify, Examples) {
  const auto a = cmd_verify(verify_opts({.type = TypeVector2{2, 3, 4, 5}, .double_points = true}, "spread-out"));
  EXPECT_EQ(a.verdict, Verdict::Match);
  EXPECT_EQ(a.oracle_results->hf.delta_h, OSequence({1, 2, 3, 4, 5, 6, 7, 8, 5, 1}));

  const auto b = cmd_verify(verify_opts({.pseudo = PseudoTypeVector{1, 1, 2, 2}}, "generic", 7));
  EXPECT_EQ(b.verdict, Verdict::ExpectedNonunique);
  EXPECT_EQ(b.exit_code(), kExitMatch);

  const auto c = cmd_verify(verify_opts({.type = TypeVector2{1}, .double_points = true}));
  EXPECT_EQ(c.verdict, Verdict::Match);

  const auto d = cmd_verify(verify_opts({.pseudo = PseudoTypeVector{1, 2}, .double_points = true}));
  EXPECT_EQ(d.verdict, Verdict::NotApplicable);
}

TEST(Verify, EveryConfigOption) {
  const Target t{.type = TypeVector2{1, 3, 4}, .double_points = true};
  for (const std::string c : {"standard", "spread-out", "standard-pseudo", "generic", "ch", "lattice"}) {
    const auto r = cmd_verify(verify_opts(t, c, 3));
    EXPECT_NE(r.verdict, Verdict::Mismatch) << c;
  }
  EXPECT_EQ(cmd_verify(verify_opts({.ct = std::pair{4, 2}}, "ctr")).verdict, Verdict::Match);
  EXPECT_EQ(cmd_verify(verify_opts({.ct = std::pair{4, 0}, .double_points = true}, "ct")).verdict, Verdict::Match);
  EXPECT_THROW(build_configuration(verify_opts(t, "ct")), ValidationError);
  EXPECT_THROW(build_configuration(verify_opts({.pseudo = PseudoTypeVector{1, 1}}, "spread-out")), ValidationError);
  EXPECT_THROW(build_configuration(verify_opts({})), ValidationError);
}

TEST(Scan, SmallBoundIsTrivial) {
  const auto s = cmd_scan({.max_sigma = 2});
  ASSERT_EQ(s.items.size(), 3u);
  EXPECT_EQ(s.items[0].inputs["type"], json({1}));
  EXPECT_EQ(s.items[1].inputs["type"], json({2}));
  EXPECT_EQ(s.items[2].inputs["type"], json({1, 2}));
  for (const auto& item : s.items) {
    EXPECT_EQ((*item.predictions)["hf_unique"], true);
    EXPECT_EQ((*item.predictions)["betti_unique"], true);
  }
  EXPECT_EQ(s.summary.verdict, Verdict::Match);
}

TEST(Scan, ClassificationsAndWitnesses) {
  const auto s = cmd_scan({.max_sigma = 6, .what = "betti", .trials = 1});
  bool saw_2345 = false;
  for (const auto& item : s.items) {
    const auto& p = *item.predictions;
    if (item.inputs["type"] == json({2, 3, 4, 5})) {
      saw_2345 = true;
      EXPECT_EQ(p["hf_unique"], true);
      EXPECT_EQ(p["betti_unique"], false);
      EXPECT_EQ(item.details["witness"]["values"], json({1, 0, 1}));
    }
    if (item.inputs["type"] == json({2, 4, 5})) EXPECT_EQ(p["betti_unique"], true);
    if (p["betti_unique"] == false) EXPECT_TRUE(item.details.contains("witness"));
  }
  EXPECT_TRUE(saw_2345);
  EXPECT_EQ(s.summary.details["confirmed_mismatch"], 0);
  EXPECT_EQ(s.summary.verdict, Verdict::Match);
}

TEST(Scan, OutputIndependentOfWorkerCount) {
  const auto a = cmd_scan({.max_sigma = 5, .trials = 1, .jobs = 1});
  const auto b = cmd_scan({.max_sigma = 5, .trials = 1, .jobs = 3});
  EXPECT_EQ(a.items, b.items);
  EXPECT_EQ(a.summary, b.summary);
}

TEST(Extremal, Examples) {
  const auto a = cmd_extremal({.t = 4, .r = 0, .trials = 50});
  EXPECT_EQ(a.verdict, Verdict::Match);
  EXPECT_EQ(a.oracle_results->hf.delta_h, OSequence({1, 2, 3, 4, 4, 4}));
  EXPECT_EQ(a.details["conjecture_verdict"], "consistent");
  EXPECT_EQ(a.details["attains_minimum"], true);

  const auto b = cmd_extremal({.t = 4, .r = 2, .trials = 50});
  EXPECT_EQ(b.oracle_results->hf.delta_h, OSequence({1, 2, 3, 4, 5, 5, 2, 2}));
  EXPECT_EQ(b.details["conjecture_verdict"], "consistent");
  EXPECT_EQ(b.details["claim"], "conjecture");

  const auto c = cmd_extremal({.t = 2, .r = 0, .trials = 3});
  EXPECT_EQ(c.details["n_points"], 1);
  EXPECT_EQ(c.verdict, Verdict::Match);
}

TEST(Extremal, IndependentOfWorkerCount) {
  const auto a = cmd_extremal({.t = 4, .r = 1, .trials = 20, .seed = 5, .jobs = 1});
  const auto b = cmd_extremal({.t = 4, .r = 1, .trials = 20, .seed = 5, .jobs = 4});
  EXPECT_EQ(a, b);
}

TEST(ExitCodes, Contract) {
  EXPECT_EQ(run({"predict", "--type", "2,4,5"}).code, 0);
  EXPECT_EQ(run({"predict", "--type", "3,2"}).code, 2);
  EXPECT_EQ(run({"predict", "--type", "x"}).code, 2);
  EXPECT_EQ(run({"predict"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"verify", "--type", "1,2", "--config", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "1,2", "--mode", "float"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "2,3,4,5", "--double"}).code, 0);
  EXPECT_EQ(run({"verify", "--pseudo", "1,1,2,2", "--config", "generic", "--seed", "7"}).code, 0);
  EXPECT_EQ(run({"reproduce", "no-such-example"}).code, 2);
  EXPECT_EQ(run({"extremal", "--ct", "5", "0", "--trials", "1", "--strategies", "conic-heavy"}).code, 3);
  EXPECT_EQ(run({"extremal", "--ct", "4", "0", "--strategies", "nope"}).code, 2);
  EXPECT_EQ(run({"extremal"}).code, 2);
  EXPECT_EQ(run({"scan", "--max-sigma", "3"}).code, 0);
}

TEST(ExitCodes, StableAcrossRuns) {
  const std::vector<std::string> args{"verify", "--type", "2,3,4,5", "--double", "--config", "generic", "--seed", "4"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JsonFileAndDump) {
  const auto path = ::testing::TempDir() + "/fplab_report.json";
  const auto dump = ::testing::TempDir() + "/fplab_dump.txt";
  const auto r = run({"--json", path, "verify", "--type", "1,2", "--double", "--dump-matrices", dump});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(parse_report(ss.str()).verdict, Verdict::Match);
  std::ifstream d(dump);
  std::string first;
  std::getline(d, first);
  EXPECT_EQ(first, "# degree 1");
}

TEST(Cli, ScanJsonLines) {
  const auto r = run({"--json", "-", "scan", "--max-sigma", "3"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  int n = 0;
  std::string last;
  for (std::string line; std::getline(in, line); ++n) last = line;
  EXPECT_EQ(n, 8);
  EXPECT_EQ(json::parse(last)["command"], "scan-summary");
}

TEST(Reproduce, SingleIdsMatch) {
  for (const std::string id : {"pseudo-3-6-6-7-12-14", "ex-2-4-5", "zt-table", "supp-diff-hf"}) {
    const auto r = cmd_reproduce({.id = id});
    EXPECT_EQ(r.verdict, Verdict::Match) << id << "\n" << render(r);
    EXPECT_EQ(r.arithmetic_mode, ArithmeticMode::Exact);
  }
}

}  // namespace
}  // namespace fplab::cli
