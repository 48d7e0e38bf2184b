#ifndef FNBT_JSON_HPP
#define FNBT_JSON_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fnbt/decision.hpp"
#include "fnbt/errors.hpp"
#include "fnbt/fusion.hpp"
#include "fnbt/mass.hpp"

namespace fnbt::json {

using nlohmann::json;

/// {"frame": [...], "assignments": [{"set": [...], "mass": x}, ...]}
inline json to_json(const MassFunction& m) {
  json assignments = json::array();
  for (const auto& f : m.focal_elements()) {
    assignments.push_back({{"set", m.frame().names_of(f.set)}, {"mass", f.mass}});
  }
  return {{"frame", m.frame().names()}, {"assignments", std::move(assignments)}};
}

/// Parses and validates a mass function. Sets naming the empty set are only
/// accepted with `policy == allow_empty`. Throws ValidationError or FrameError.
inline MassFunction mass_from_json(const json& j, EmptySetPolicy policy = EmptySetPolicy::forbid) {
  try {
    Frame frame(j.at("frame").get<std::vector<std::string>>());
    std::vector<Focal> focals;
    for (const auto& a : j.at("assignments")) {
      const auto& mass = a.at("mass");
      if (!mass.is_number()) throw ValidationError("mass must be a number");
      focals.push_back({frame.set_of(a.at("set").get<std::vector<std::string>>()), mass.get<double>()});
    }
    return MassFunction::create(std::move(frame), std::move(focals), policy);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed mass function JSON: ") + e.what());
  }
}

/// Accepts either a bare array of mass functions or {"mass_functions": [...]}.
inline std::vector<MassFunction> mass_list_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("mass_functions")) throw ValidationError("expected a \"mass_functions\" array");
    list = &j.at("mass_functions");
  }
  if (!list->is_array()) throw ValidationError("expected an array of mass functions");
  std::vector<MassFunction> out;
  for (const auto& item : *list) out.push_back(mass_from_json(item));
  return out;
}

inline json to_json(const OpenWorldAssessment& a) {
  json witnesses = json::array();
  for (const auto& w : a.witnesses) {
    witnesses.push_back({{"element", a.universe.name(w.element)},
                         {"source", w.source},
                         {"focal", a.universe.names_of(w.focal)}});
  }
  return {{"open_world", a.is_open_world()},
          {"total_contradiction", a.is_total_contradiction()},
          {"universe", a.universe.names()},
          {"upsilon", a.upsilon_names()},
          {"witnesses", std::move(witnesses)}};
}

inline json to_json(const std::vector<SingletonSupport>& table) {
  json out = json::array();
  for (const auto& row : table) out.push_back({{"element", row.name}, {"bel", row.bel}, {"pl", row.pl}});
  return out;
}

inline json to_json(const FusionReport& r) {
  json transformed = json::array();
  for (const auto& m : r.transformed_inputs) transformed.push_back(to_json(m));
  return {{"rule", std::string(to_string(r.rule))},
          {"open_world", r.assessment.is_open_world()},
          {"upsilon", r.assessment.upsilon_names()},
          {"omega", r.omega.names()},
          {"k_raw", r.k_raw},
          {"k_transformed", r.k_transformed},
          {"assessment", to_json(r.assessment)},
          {"transformed_inputs", std::move(transformed)},
          {"fused", to_json(r.fused)},
          {"singletons", to_json(singleton_table(r.fused))}};
}

}  // namespace fnbt::json

#endif  // FNBT_JSON_HPP
