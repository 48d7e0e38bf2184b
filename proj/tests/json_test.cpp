#include <gtest/gtest.h>

#include "fnbt/json.hpp"

namespace {

using nlohmann::json;

TEST(Json, MassRoundTrip) {
  const fnbt::Frame f{"a", "b", "c"};
  auto m = fnbt::MassFunction::from_names(f, {{{"a"}, 0.25}, {{"b", "c"}, 0.75}});
  auto j = fnbt::json::to_json(m);
  EXPECT_EQ(j["frame"], json({"a", "b", "c"}));
  auto back = fnbt::json::mass_from_json(j);
  EXPECT_TRUE(fnbt::same_focal_map(m, back));
}

TEST(Json, ListForms) {
  auto one = json::parse(R"({"frame":["a","b"],"assignments":[{"set":["a"],"mass":1.0}]})");
  EXPECT_EQ(fnbt::json::mass_list_from_json(json::array({one, one})).size(), 2u);
  EXPECT_EQ(fnbt::json::mass_list_from_json(json{{"mass_functions", {one}}}).size(), 1u);
}

TEST(Json, MalformedInputIsValidationError) {
  EXPECT_THROW(fnbt::json::mass_from_json(json::parse(R"({"frame":["a"]})")), fnbt::ValidationError);
  EXPECT_THROW(fnbt::json::mass_from_json(json::parse(R"({"frame":["a"],"assignments":[{"set":["a"],"mass":"x"}]})")),
               fnbt::ValidationError);
  EXPECT_THROW(fnbt::json::mass_from_json(json::parse(R"({"frame":["a","b"],"assignments":[{"set":["a"],"mass":0.4}]})")),
               fnbt::ValidationError);
  EXPECT_THROW(fnbt::json::mass_list_from_json(json(3)), fnbt::ValidationError);
}

TEST(Json, FusionReport) {
  const fnbt::Frame f{"a", "b", "c"};
  auto m1 = fnbt::MassFunction::from_names(f, {{{"a"}, 0.9}, {{"b"}, 0.1}});
  auto m2 = fnbt::MassFunction::from_names(f, {{{"b"}, 0.1}, {{"c"}, 0.9}});
  auto j = fnbt::json::to_json(fnbt::fnbt_fuse(m1, m2));
  EXPECT_EQ(j["rule"], "dempster");
  EXPECT_EQ(j["open_world"], true);
  EXPECT_EQ(j["upsilon"], json({"a", "c"}));
  EXPECT_NEAR(j["k_raw"].get<double>(), 0.99, 1e-12);
  EXPECT_EQ(j["transformed_inputs"].size(), 2u);
  EXPECT_EQ(j["assessment"]["witnesses"].size(), 2u);
}

}  // namespace
