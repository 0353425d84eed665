#include <gtest/gtest.h>

#include <string>

#include "epikin/error.hpp"
#include "epikin/scenario.hpp"
#include "support.hpp"

using namespace epikin;

namespace {

const char* kCanonical =
    R"({"model":"sis","sis":{"r":0.5,"alpha":0.2,"k":1.0,"i0":0.1},"grid":{"t_start":0,"t_end":50,"n_points":5001}})";

Error parse_failure(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "parse succeeded: " << text;
  return Error(ErrorKind::IoError, "");
}

bool mentions(const Error& e, const std::string& needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

}  // namespace

TEST(ParseScenario, CanonicalSis) {
  const ScenarioConfig cfg = parse_scenario(kCanonical);
  EXPECT_EQ(cfg.model(), ModelKind::SIS);
  EXPECT_EQ(std::get<SisParameters>(cfg.parameters), (SisParameters{0.5, 0.2, 1.0, 0.1}));
  EXPECT_EQ(cfg.grid, (TimeGrid{0.0, 50.0, 5001}));
  EXPECT_EQ(cfg.integrator, IntegratorConfig{});
  EXPECT_EQ(cfg.eps, 1e-3);
}

TEST(ParseScenario, SirWithOptionalBlocks) {
  const ScenarioConfig cfg = parse_scenario(
      R"({"model":"sir","sir":{"beta":0.8,"mu":0.1,"s0":0.7,"i0":0.1},
          "grid":{"t_start":0,"t_end":20,"n_points":21},
          "integrator":{"dt":0.002,"halving_check":false},"eps":0.01})");
  EXPECT_EQ(std::get<SirParameters>(cfg.parameters), (SirParameters{0.8, 0.1, 0.7, 0.1}));
  EXPECT_EQ(cfg.integrator.dt, 0.002);
  EXPECT_FALSE(cfg.integrator.halving_check);
  EXPECT_EQ(cfg.integrator.tolerance, 1e-9);
  EXPECT_EQ(cfg.eps, 0.01);
}

TEST(ParseScenario, InvariantViolationNamesField) {
  const Error e = parse_failure(replace(kCanonical, "\"i0\":0.1", "\"i0\":2.0"));
  EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
  EXPECT_TRUE(mentions(e, "i0 must be < k")) << e.what();
}

TEST(ParseScenario, UnknownKeysAreListed) {
  const Error top = parse_failure(replace(kCanonical, "\"model\"", "\"gamma\":1,\"model\""));
  EXPECT_EQ(top.kind(), ErrorKind::ValidationError);
  EXPECT_TRUE(mentions(top, "\"gamma\"")) << top.what();

  const Error nested = parse_failure(replace(kCanonical, "\"r\":0.5", "\"r\":0.5,\"zeta\":2,\"eta\":3"));
  EXPECT_TRUE(mentions(nested, "sis.zeta")) << nested.what();
  EXPECT_TRUE(mentions(nested, "sis.eta")) << nested.what();
}

TEST(ParseScenario, MalformedJsonReportsPosition) {
  const Error e = parse_failure(R"({"model":"sis", "sis": {)");
  EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  EXPECT_TRUE(mentions(e, "byte")) << e.what();
}

TEST(ParseScenario, ModelBlockMustMatchTag) {
  EXPECT_EQ(parse_failure(replace(kCanonical, "\"model\":\"sis\"", "\"model\":\"sir\"")).kind(),
            ErrorKind::ValidationError);
  EXPECT_EQ(parse_failure(replace(kCanonical, "\"model\":\"sis\"", "\"model\":\"seir\"")).kind(),
            ErrorKind::ValidationError);
}

TEST(ParseScenario, StructuralErrors) {
  EXPECT_EQ(parse_failure("[1,2]").kind(), ErrorKind::ValidationError);
  EXPECT_TRUE(mentions(parse_failure(R"({"model":"sis","sis":{"r":0.5,"alpha":0.2,"k":1,"i0":0.1}})"),
                       "grid"));
  EXPECT_TRUE(mentions(parse_failure(replace(kCanonical, "\"n_points\":5001", "\"n_points\":2.5")),
                       "n_points"));
  EXPECT_TRUE(mentions(parse_failure(replace(kCanonical, "\"n_points\":5001", "\"n_points\":1")),
                       "n_points"));
  EXPECT_TRUE(mentions(parse_failure(replace(kCanonical, "\"alpha\":0.2", "\"alpha\":\"0.2\"")),
                       "alpha"));
  EXPECT_TRUE(mentions(parse_failure(replace(kCanonical, "\"t_end\":50", "\"t_end\":0")), "t_end"));
}

TEST(SerializeScenario, RoundTripFixpoint) {
  test::Draws draws(51);
  for (int n = 0; n < 50; ++n) {
    ScenarioConfig cfg;
    if (n % 2 == 0)
      cfg.parameters = draws.sis();
    else
      cfg.parameters = draws.sir();
    cfg.grid = TimeGrid{draws.uniform(0, 5), draws.uniform(6, 100),
                        static_cast<std::size_t>(draws.uniform(2, 10000))};
    cfg.integrator = IntegratorConfig{draws.uniform(1e-4, 1e-2), n % 3 == 0, draws.uniform(1e-12, 1e-6)};
    cfg.eps = draws.uniform(1e-8, 0.5);
    const std::string text = serialize_scenario(cfg);
    const ScenarioConfig back = parse_scenario(text);
    ASSERT_EQ(back, cfg) << text;
    ASSERT_EQ(serialize_scenario(back), text);
  }
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(50.0), "50");
  EXPECT_EQ(std::stod(format_double(0.28360067729018700)), 0.28360067729018700);
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}
