#include <gtest/gtest.h>

#include "fnbt/diagnostics.hpp"
#include "fnbt/fusion.hpp"
#include "oracle.hpp"

namespace {

using fnbt::Frame;
using fnbt::MassFunction;

const Frame kAbc{"a", "b", "c"};

MassFunction zadeh1() { return MassFunction::from_names(kAbc, {{{"a"}, 0.9}, {{"b"}, 0.1}}); }
MassFunction zadeh2() { return MassFunction::from_names(kAbc, {{{"b"}, 0.1}, {{"c"}, 0.9}}); }

double mass_of(const MassFunction& m, std::vector<std::string> names) { return m.mass(names); }

TEST(EssentialConflict, Zadeh) {
  auto a = fnbt::essential_conflict_set(zadeh1(), zadeh2());
  EXPECT_TRUE(a.is_open_world());
  EXPECT_FALSE(a.is_total_contradiction());
  EXPECT_EQ(a.upsilon_names(), (std::vector<std::string>{"a", "c"}));
  ASSERT_EQ(a.witnesses.size(), 2u);
  EXPECT_EQ(a.witnesses[0].source, 0u);
  EXPECT_EQ(a.witnesses[1].source, 1u);
}

TEST(EssentialConflict, IdenticalInputsAreClosedWorld) {
  auto a = fnbt::essential_conflict_set(zadeh1(), zadeh1());
  EXPECT_FALSE(a.is_open_world());
  EXPECT_TRUE(a.witnesses.empty());
}

TEST(EssentialConflict, DisjointSingletonsAreTotalContradiction) {
  auto m1 = MassFunction::from_names(Frame{"a"}, {{{"a"}, 1.0}});
  auto m2 = MassFunction::from_names(Frame{"b"}, {{{"b"}, 1.0}});
  auto a = fnbt::essential_conflict_set(m1, m2);
  EXPECT_TRUE(a.is_total_contradiction());
  EXPECT_THROW(fnbt::fnbt_fuse(m1, m2), fnbt::TotalConflict);
}

TEST(EssentialConflict, RejectsEmptySetMassAndSingleSource) {
  auto e = MassFunction::from_names(kAbc, {{{}, 0.5}, {{"a"}, 0.5}}, fnbt::EmptySetPolicy::allow_empty);
  EXPECT_THROW(fnbt::essential_conflict_set(e, zadeh1()), fnbt::ValidationError);
  const MassFunction one[] = {zadeh1()};
  EXPECT_THROW(fnbt::essential_conflict_set(one), fnbt::ValidationError);
}

TEST(ExtendedFrame, UnionOfEffectiveFrames) {
  auto m1 = MassFunction::from_names(Frame{"a", "b", "x"}, {{{"a"}, 0.5}, {{"b"}, 0.5}});
  auto m2 = MassFunction::from_names(Frame{"c", "b"}, {{{"c", "b"}, 1.0}});
  EXPECT_EQ(fnbt::extended_effective_frame(m1, m2).names(), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Transform, AddsTheUnknownPart) {
  const Frame omega{"a", "b", "c"};
  auto t1 = fnbt::full_negation_transform(zadeh1(), omega);
  EXPECT_NEAR(mass_of(t1, {"a", "c"}), 0.9, 1e-12);
  EXPECT_NEAR(mass_of(t1, {"b", "c"}), 0.1, 1e-12);
  auto t2 = fnbt::full_negation_transform(zadeh2(), omega);
  EXPECT_NEAR(mass_of(t2, {"a", "c"}), 0.9, 1e-12);
  EXPECT_NEAR(mass_of(t2, {"a", "b"}), 0.1, 1e-12);
}

TEST(Transform, WholeEffectiveFrameIsUntouched) {
  const Frame omega{"a", "b", "c"};
  auto m = MassFunction::from_names(kAbc, {{{"a", "b", "c"}, 0.4}, {{"b"}, 0.6}});
  auto t = fnbt::full_negation_transform(m, omega);
  EXPECT_TRUE(fnbt::same_focal_map(m, t));
}

TEST(Fuse, ZadehGoldenNumbers) {
  auto r = fnbt::fnbt_fuse(zadeh1(), zadeh2());
  EXPECT_NEAR(mass_of(r.fused, {"a", "c"}), 0.81, 1e-9);
  EXPECT_NEAR(mass_of(r.fused, {"a"}), 0.09, 1e-9);
  EXPECT_NEAR(mass_of(r.fused, {"c"}), 0.09, 1e-9);
  EXPECT_NEAR(mass_of(r.fused, {"b"}), 0.01, 1e-9);
  EXPECT_NEAR(r.k_raw, 0.99, 1e-12);
  EXPECT_NEAR(r.k_transformed, 0.0, 1e-12);
  EXPECT_EQ(r.omega.describe(), "{a,b,c}");
}

TEST(Fuse, ClosedWorldIsPlainCombination) {
  auto m1 = MassFunction::from_names(kAbc, {{{"a", "b"}, 0.6}, {{"b"}, 0.4}});
  auto m2 = MassFunction::from_names(kAbc, {{{"b", "c"}, 0.7}, {{"a", "b", "c"}, 0.3}});
  auto r = fnbt::fnbt_fuse(m1, m2);
  EXPECT_FALSE(r.assessment.is_open_world());
  EXPECT_TRUE(fnbt::same_focal_map(r.fused, fnbt::dempster(m1, m2)));
}

TEST(Fuse, HeterogeneousFrames) {
  auto m1 = MassFunction::from_names(Frame{"a", "b"}, {{{"a"}, 0.8}, {{"a", "b"}, 0.2}});
  auto m2 = MassFunction::from_names(Frame{"b", "c"}, {{{"c"}, 0.7}, {{"b", "c"}, 0.3}});
  auto r = fnbt::fnbt_fuse(m1, m2);
  EXPECT_EQ(r.assessment.upsilon_names(), (std::vector<std::string>{"a", "c"}));
  double total = 0.0;
  for (const auto& f : r.fused.focal_elements()) total += f.mass;
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_GT(r.fused.plausibility(r.fused.frame().set_of({"a"})), 0.0);
  EXPECT_GT(r.fused.plausibility(r.fused.frame().set_of({"c"})), 0.0);
}

TEST(Fuse, BackEndRuleIsPluggable) {
  auto r = fnbt::fnbt_fuse(zadeh1(), zadeh2(), fnbt::Rule::yager);
  EXPECT_EQ(r.rule, fnbt::Rule::yager);
  // No conflict after the transform, so every back-end agrees here.
  EXPECT_NEAR(mass_of(r.fused, {"a", "c"}), 0.81, 1e-9);
}

TEST(Fuse, ManySources) {
  const MassFunction ms[] = {zadeh1(), zadeh2(), zadeh1()};
  auto r = fnbt::fnbt_fuse_many(ms);
  EXPECT_TRUE(r.assessment.is_open_world());
  EXPECT_EQ(r.transformed_inputs.size(), 3u);
  double total = 0.0;
  for (const auto& f : r.fused.focal_elements()) total += f.mass;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Diagnostics, ZadehAbsolutizesAAndC) {
  auto d = fnbt::diagnose_dempster(zadeh1(), zadeh2());
  EXPECT_EQ(d.absolutized, (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(d.assessment.universe.format(d.consensus), "{b}");
  EXPECT_NEAR(d.consensus_plausibility, 1.0, 1e-12);
}

TEST(Oracle, EssentialConflictMatchesBruteForce) {
  oracle::Generator gen(11);
  for (int i = 0; i < 300; ++i) {
    auto [m1, m2] = gen.pair();
    auto got = fnbt::essential_conflict_set(m1, m2).upsilon_names();
    auto want = oracle::essential_conflict(oracle::to_naive(m1), oracle::to_naive(m2));
    EXPECT_EQ(oracle::NameSet(got.begin(), got.end()), want);
  }
}

}  // namespace
