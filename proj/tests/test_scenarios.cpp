#include <gtest/gtest.h>

#include <json.hpp>
#include <set>

#include "illab/error.hpp"
#include "illab/report.hpp"
#include "illab/scenario.hpp"

using namespace illab;
using json = nlohmann::json;

namespace {

ErrorKind parse_error(const std::string& text) {
  try {
    parse_scenarios(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Numeric;
}

}  // namespace

TEST(Catalog, HasTheBuiltIns) {
  const auto& all = builtin_scenarios();
  EXPECT_GE(all.size(), 8u);
  std::set<std::string> names;
  for (const auto& s : all) {
    names.insert(s.name);
    EXPECT_FALSE(s.notes.empty()) << s.name;
    EXPECT_FALSE(s.description.empty()) << s.name;
    EXPECT_EQ(s.schedule.samples.size(), 12u) << s.name;
  }
  EXPECT_EQ(names.size(), all.size());
  for (const char* n : {"generic_diagonal", "generic_skew", "thm23_vertex", "thm24_gamma2", "prop44_i", "prop44_ii1_k1",
                        "prop44_ii2_kinf", "prop44_ii2_k0"})
    EXPECT_TRUE(names.count(n)) << n;
  EXPECT_EQ(builtin_scenario("prop44_ii1_k1").precision, Precision::Extended);
  EXPECT_THROW(builtin_scenario("missing"), Error);
  EXPECT_EQ(json::parse(builtin_catalog_json())["scenarios"].size(), all.size());
}

TEST(Catalog, ParsesTablesAndSchedules) {
  const auto s = parse_scenarios(R"({
    "name": "tabled",
    "family": {"table": [
      {"eps": 0.1,  "points": [[0,0,0,0], [0.1,0,0,0], [0,0,0.1,0], [0.1,0,0.1,0]]},
      {"eps": 0.05, "points": [[0,0,0,0], [0.05,0,0,0], [0,0,0.05,0], [0.05,0,0.05,0]]},
      {"eps": 0.025, "points": [[0,0,0,0], [0.025,0,0,0], [0,0,0.025,0], [0.025,0,0.025,0]]},
      {"eps": 0.0125, "points": [[0,0,0,0], [0.0125,0,0,0], [0,0,0.0125,0], [0.0125,0,0.0125,0]]},
      {"eps": 0.00625, "points": [[0,0,0,0], [0.00625,0,0,0], [0,0,0.00625,0], [0.00625,0,0.00625,0]]}
    ]},
    "schedule": {"samples": [0.1, 0.05, 0.025, 0.0125, 0.00625], "passes": 1}
  })");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].schedule.samples.size(), 5u);
  EXPECT_EQ(s[0].schedule.extrapolation_passes, 1);
  const auto pts = s[0].family.at(0.025L);
  EXPECT_EQ(pts[3][1], XComplex(0.025));
  EXPECT_EQ(classify(s[0].family, s[0].schedule).tag, Tag::Generic);

  const auto g = parse_scenarios(R"({"name": "g", "family": {"points": [["0","0"],["e","0"]]},
                                     "schedule": {"eps0": 0.2, "ratio": 0.25, "count": 6}})");
  EXPECT_EQ(g[0].schedule.samples.size(), 6u);
  EXPECT_NEAR(static_cast<double>(g[0].schedule.samples[1]), 0.05, 1e-17);
}

TEST(Catalog, RejectsBadInput) {
  EXPECT_EQ(parse_error("{not json"), ErrorKind::Parse);
  EXPECT_EQ(parse_error(R"({"family": {}})"), ErrorKind::Config);
  EXPECT_EQ(parse_error(R"({"name": "x", "family": {"points": [["0","0"]]}})"), ErrorKind::Config);
  EXPECT_EQ(parse_error(R"({"name": "x", "family": {"points": [["0","0"],["e","(("]]}})"), ErrorKind::Config);
  EXPECT_EQ(parse_error(R"({"name": "x", "family": {"points": [["0","0"],["e","0"]]}, "precision": "quad"})"),
            ErrorKind::Config);
  EXPECT_EQ(parse_error(R"({"name": "x", "family": {"points": [["0","0"],["e","0"]]},
                           "expect": {"classification": "Sideways"}})"),
            ErrorKind::Config);
  EXPECT_EQ(parse_error(R"({"scenarios": [{"name": "a", "family": {"points": [["0","0"],["e","0"]]}},
                                          {"name": "a", "family": {"points": [["0","0"],["e","0"]]}}]})"),
            ErrorKind::Config);
  EXPECT_EQ(parse_error(R"({"name": "x", "family": {"points": [["0","0"],["e","0"]]},
                           "schedule": {"samples": [0.1, 0.2, 0.3, 0.4]}})"),
            ErrorKind::Config);
  EXPECT_THROW(load_scenarios("/nonexistent/config.json"), Error);
}

TEST(Run, EveryBuiltInPasses) {
  for (const auto& r : verify_all(builtin_scenarios())) {
    EXPECT_TRUE(r.passed()) << r.scenario;
    EXPECT_EQ(r.exit_code(), 0) << r.scenario;
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << r.scenario << ": " << c.name << " " << c.detail;
  }
}

TEST(Run, ReportsAreDeterministic) {
  const auto a = reports_json(verify_all(builtin_scenarios()));
  const auto b = reports_json(verify_all(builtin_scenarios()));
  EXPECT_EQ(a, b);
  const auto& s = builtin_scenario("generic_diagonal");
  EXPECT_EQ(report_json(run(s)), report_json(run(s)));
  EXPECT_EQ(json::parse(report_json(run(s), true)).count("seconds"), 1u);
  EXPECT_EQ(json::parse(report_json(run(s))).count("seconds"), 0u);
}

TEST(Run, ReportShape) {
  const json j = json::parse(report_json(run(builtin_scenario("generic_diagonal"))));
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["classification"]["tag"], "Generic");
  ASSERT_EQ(j["classification"]["directions"].size(), 6u);
  for (const auto& d : j["classification"]["directions"]) {
    EXPECT_EQ(d["pair"].size(), 2u);
    EXPECT_EQ(d["rep_re"].size(), 2u);
    EXPECT_EQ(d["rep_im"].size(), 2u);
    EXPECT_TRUE(d["converged"].get<bool>());
  }
  const auto& l = j["limit"];
  EXPECT_EQ(l["status"], "Converged");
  EXPECT_TRUE(l["certified"].get<bool>());
  EXPECT_EQ(l["length"], 4);
  EXPECT_EQ(l["ideal"]["length"], 4);
  EXPECT_EQ(l["ideal"]["staircase"].size(), 4u);
  EXPECT_EQ(j["green"]["pair"], json({1, 2}));
  EXPECT_TRUE(j["green"]["gap"]["certified_bounded"].get<bool>());

  const json d = json::parse(report_json(run(builtin_scenario("thm24_gamma2"))));
  EXPECT_TRUE(d["no_equality"].get<bool>());
  EXPECT_EQ(d["minimal_generators"].size(), 3u);
  EXPECT_EQ(d["literature"].size(), 2u);
}

TEST(Run, TightToleranceFails) {
  RunOptions o;
  o.frame_tol = 1e-15;
  const auto r = run(builtin_scenario("prop44_ii1_k1"), o);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.exit_code(), 3);
}

TEST(Run, WrongExpectationFails) {
  auto s = parse_scenarios(R"({"name": "wrong", "family": {"points": [["0","0"],["e","0"],["0","e"],["e","e"]]},
                               "expect": {"classification": "VertexDegenerate", "limit_ideal": ["z1*z2", "z2^2", "z1^3"]}})");
  const auto r = run(s[0]);
  EXPECT_FALSE(r.passed());
  std::set<std::string> failed;
  for (const auto& c : r.checks)
    if (!c.passed) failed.insert(c.name);
  EXPECT_TRUE(failed.count("classification"));
  EXPECT_TRUE(failed.count("predicted_limit"));
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(exit_code_for(ErrorKind::Config), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::Parse), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::NonConvergent), 3);
  EXPECT_EQ(exit_code_for(ErrorKind::ExtraCommonZeros), 3);
}
