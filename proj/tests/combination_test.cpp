#include <gtest/gtest.h>

#include "fnbt/combination.hpp"
#include "oracle.hpp"

namespace {

using fnbt::Frame;
using fnbt::MassFunction;

const Frame kAbc{"a", "b", "c"};

MassFunction zadeh1() { return MassFunction::from_names(kAbc, {{{"a"}, 0.9}, {{"b"}, 0.1}}); }
MassFunction zadeh2() { return MassFunction::from_names(kAbc, {{{"b"}, 0.1}, {{"c"}, 0.9}}); }

TEST(Dempster, ZadehCollapsesOntoB) {
  auto p = fnbt::conflict(zadeh1(), zadeh2());
  EXPECT_NEAR(p.k, 0.99, 1e-12);
  EXPECT_EQ(p.conflicting_pairs.size(), 3u);
  auto m = fnbt::dempster(zadeh1(), zadeh2());
  EXPECT_NEAR(m.mass(std::vector<std::string>{"b"}), 1.0, 1e-12);
  EXPECT_EQ(m.focal_count(), 1u);
}

TEST(Dempster, TotalConflictThrows) {
  auto m1 = MassFunction::from_names(kAbc, {{{"a"}, 1.0}});
  auto m2 = MassFunction::from_names(kAbc, {{{"b"}, 1.0}});
  try {
    fnbt::dempster(m1, m2);
    FAIL();
  } catch (const fnbt::TotalConflict& e) {
    EXPECT_DOUBLE_EQ(e.k(), 1.0);
  }
}

TEST(Dempster, StaysNormalizedNearTotalConflict) {
  auto m1 = MassFunction::from_names(kAbc, {{{"a"}, 1.0 - 1e-5}, {{"b"}, 1e-5}});
  auto m2 = MassFunction::from_names(kAbc, {{{"c"}, 1.0 - 1e-5}, {{"b"}, 1e-5}});
  auto m = fnbt::dempster(m1, m2);
  EXPECT_NEAR(m.mass(std::vector<std::string>{"b"}), 1.0, 1e-12);
}

TEST(Dempster, VacuousIsNeutral) {
  auto m = MassFunction::from_names(kAbc, {{{"a"}, 0.6}, {{"b", "c"}, 0.4}});
  EXPECT_TRUE(fnbt::same_focal_map(fnbt::dempster(m, MassFunction::vacuous(kAbc)), m));
}

TEST(Dempster, DifferentFramesAreRejected) {
  auto other = MassFunction::vacuous(Frame{"a", "b"});
  EXPECT_THROW(fnbt::dempster(zadeh1(), other), fnbt::FrameMismatch);
  auto [x, y] = fnbt::align(zadeh1(), other);
  EXPECT_EQ(x.frame(), y.frame());
}

TEST(Yager, ConflictGoesToTheFrame) {
  auto m = fnbt::yager(zadeh1(), zadeh2());
  EXPECT_NEAR(m.mass(std::vector<std::string>{"b"}), 0.01, 1e-12);
  EXPECT_NEAR(m.mass(kAbc.full_set()), 0.99, 1e-12);
}

TEST(Tbm, ConflictStaysOnEmptySet) {
  auto m = fnbt::tbm_conjunctive(zadeh1(), zadeh2());
  EXPECT_TRUE(m.allows_empty());
  EXPECT_NEAR(m.mass(kAbc.empty_set()), 0.99, 1e-12);
  EXPECT_NEAR(m.mass(std::vector<std::string>{"b"}), 0.01, 1e-12);
  // Combining further keeps the conflict.
  auto again = fnbt::tbm_conjunctive(m, zadeh2());
  EXPECT_NEAR(again.mass(kAbc.empty_set()), 1.0 - 0.001, 1e-12);
}

TEST(Mgcr, MatchesDempsterWithoutEmptyMass) {
  auto m1 = MassFunction::from_names(kAbc, {{{"a"}, 0.6}, {{"a", "b"}, 0.4}});
  auto m2 = MassFunction::from_names(kAbc, {{{"b"}, 0.3}, {{"a", "c"}, 0.7}});
  auto g = fnbt::mgcr(m1, m2);
  EXPECT_NEAR(g.mass(kAbc.empty_set()), 0.0, 1e-15);
  EXPECT_TRUE(fnbt::same_focal_map(g, fnbt::dempster(m1, m2)));
}

TEST(Mgcr, EmptyMassIsProductOfInputs) {
  auto m1 = MassFunction::from_names(kAbc, {{{}, 0.2}, {{"a"}, 0.8}}, fnbt::EmptySetPolicy::allow_empty);
  auto m2 = MassFunction::from_names(kAbc, {{{}, 0.5}, {{"a", "b"}, 0.5}}, fnbt::EmptySetPolicy::allow_empty);
  auto g = fnbt::mgcr(m1, m2);
  EXPECT_NEAR(g.mass(kAbc.empty_set()), 0.1, 1e-12);
  EXPECT_NEAR(g.mass(std::vector<std::string>{"a"}), 0.9, 1e-12);
}

TEST(Mgcr, TotalConflictThrows) {
  auto m1 = MassFunction::from_names(kAbc, {{{"a"}, 1.0}});
  auto m2 = MassFunction::from_names(kAbc, {{{"c"}, 1.0}});
  EXPECT_THROW(fnbt::mgcr(m1, m2), fnbt::TotalConflict);
}

TEST(Murphy, AveragesThenCombines) {
  auto m = fnbt::combine(fnbt::Rule::murphy, zadeh1(), zadeh2());
  // Mean: a 0.45, b 0.1, c 0.45; self-combination: k = 1 - (0.2025 + 0.01 + 0.2025).
  const double kept = 0.2025 + 0.01 + 0.2025;
  EXPECT_NEAR(m.mass(std::vector<std::string>{"a"}), 0.2025 / kept, 1e-12);
  EXPECT_NEAR(m.mass(std::vector<std::string>{"b"}), 0.01 / kept, 1e-12);
}

TEST(Rule, NamesRoundTrip) {
  for (auto r : {fnbt::Rule::dempster, fnbt::Rule::yager, fnbt::Rule::tbm, fnbt::Rule::mgcr, fnbt::Rule::murphy}) {
    EXPECT_EQ(fnbt::parse_rule(fnbt::to_string(r)), r);
  }
  EXPECT_FALSE(fnbt::parse_rule("nope"));
}

TEST(CombineAll, FoldsLeftToRight) {
  const MassFunction ms[] = {zadeh1(), MassFunction::vacuous(kAbc), zadeh1()};
  auto m = fnbt::combine_all(fnbt::Rule::dempster, ms);
  EXPECT_TRUE(fnbt::same_focal_map(m, fnbt::dempster(zadeh1(), zadeh1())));
}

TEST(Oracle, CombinationRulesMatchBruteForce) {
  oracle::Generator gen(7);
  for (int i = 0; i < 300; ++i) {
    auto frame = gen.frame();
    auto n1 = gen.mass(frame);
    auto n2 = gen.mass(frame);
    auto m1 = oracle::from_naive(frame, n1);
    auto m2 = oracle::from_naive(frame, n2);
    oracle::NameSet theta(frame.names().begin(), frame.names().end());
    EXPECT_NEAR(fnbt::conflict(m1, m2).k, oracle::conflict(n1, n2), 1e-9);
    EXPECT_TRUE(oracle::maps_equal(oracle::to_naive(fnbt::yager(m1, m2)), oracle::yager(n1, n2, theta)));
    EXPECT_TRUE(oracle::maps_equal(oracle::to_naive(fnbt::tbm_conjunctive(m1, m2)), oracle::conjunctive(n1, n2)));
    auto expected = oracle::dempster(n1, n2);
    if (expected.empty()) {
      EXPECT_THROW(fnbt::dempster(m1, m2), fnbt::TotalConflict);
    } else {
      EXPECT_TRUE(oracle::maps_equal(oracle::to_naive(fnbt::dempster(m1, m2)), expected));
    }
  }
}

}  // namespace
