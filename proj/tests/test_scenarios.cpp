#include "lbp/errors.hpp"
#include "lbp/scenarios.hpp"

#include <gtest/gtest.h>

namespace lbp {
namespace {

class Scenario : public ::testing::TestWithParam<std::string> {};

TEST_P(Scenario, AllChecksPass) {
  const auto rep = run_scenario(GetParam(), 12);
  EXPECT_FALSE(rep.checks.empty());
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << " at " << c.first_mismatch << ": " << c.detail;
}

INSTANTIATE_TEST_SUITE_P(Each, Scenario,
                         ::testing::Values("moments", "example1", "example2", "example3", "example4", "factorizations",
                                           "hankel", "toeplitz", "cfrac"));

TEST(Scenarios, AllAggregatesAndPrefixes) {
  const auto rep = run_scenario("all", 8);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.id, "all");
  EXPECT_EQ(rep.checks.front().name.rfind("moments: ", 0), 0u);
}

TEST(Scenarios, Errors) {
  EXPECT_THROW(run_scenario("example9"), UsageError);
  EXPECT_THROW(run_scenario("cfrac", 3), UsageError);
}

TEST(Scenarios, RenderingIsStable) {
  ScenarioReport rep{"x", {{"a, b", true, -1, ""}, {"q", false, 3, "got \"1\""}}};
  EXPECT_EQ(render_report(rep, "csv"),
            "scenario,check,status,first_mismatch,detail\nx,\"a, b\",PASS,,\nx,q,FAIL,3,\"got \"\"1\"\"\"\n");
  const auto json = render_report(rep, "json");
  EXPECT_NE(json.find("\"passed\": false"), std::string::npos);
  EXPECT_NE(json.find("\"first_mismatch\": null"), std::string::npos);
  EXPECT_THROW(render_report(rep, "xml"), UsageError);
}

}  // namespace
}  // namespace lbp
