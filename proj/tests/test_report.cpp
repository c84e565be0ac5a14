#include <gtest/gtest.h>

#include "superw/report.hpp"

using namespace superw;

TEST(Report, RationalsAreExact) {
  EXPECT_EQ(rational_json(Rational(3)).dump(), "3");
  EXPECT_EQ(rational_json(Rational(-3, 2)).dump(), "\"-3/2\"");
}

TEST(Report, WeightAndCharacter) {
  Weight w = Weight::epsilon(1) - Weight::epsilon(3, 2);
  EXPECT_EQ(weight_json(w).dump(), R"({"1":1,"3":-2})");
  auto j = character_json(character(*natural(2)));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["dim"], 1);
  EXPECT_EQ(j[0]["zdeg"], 1);
}

TEST(Report, ModuleDumpIsStable) {
  auto a = module_json(*adjoint_module(2), true).dump();
  auto b = module_json(*adjoint_module(2), true).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(module_json(*adjoint_module(3))["dim"], 24);
}

TEST(Report, CheckIsDeterministic) {
  auto a = property_json(check_algebra(3, 50, 9)).dump();
  EXPECT_EQ(a, property_json(check_algebra(3, 50, 9)).dump());
  for (const auto& p : check_algebra(3, 50, 9)) EXPECT_TRUE(p.pass) << p.name;
  auto bad = check_algebra(3, 50, 9, BracketSign::flipped);
  EXPECT_FALSE(bad[0].pass);
  EXPECT_NE(bad[0].counterexample.find("defect"), std::string::npos);
}

TEST(Report, SocleAndStabilization) {
  auto s = socle_json(verify_socle_identity(Partition({1}), Partition({1}), 4));
  EXPECT_TRUE(s["pass"]);
  EXPECT_EQ(s["layers"].size(), 2u);
  auto r = stabilization_json(stabilize(Partition({1}), Partition{}, 3, 4, Family::l_minus));
  EXPECT_TRUE(r["stabilized"]);
  EXPECT_EQ(r["characters"]["4"]["dim"], 7);
}

TEST(Report, OperatorTriplets) {
  auto j = module_json(*natural(2), true, true);
  ASSERT_EQ(j["operators"].size(), 4u);
  // E_12 sends x2 to x1: row 0, column 1
  EXPECT_EQ(j["operators"][1]["term"], "x1 d2");
  EXPECT_EQ(j["operators"][1]["entries"].dump(), R"([[0,1,"1"]])");
}
