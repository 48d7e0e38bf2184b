#ifndef FNBT_DECISION_HPP
#define FNBT_DECISION_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fnbt/errors.hpp"
#include "fnbt/mass.hpp"

namespace fnbt {

enum class Strategy { mass, bel, pl };

inline constexpr std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::mass: return "mass";
    case Strategy::bel: return "bel";
    case Strategy::pl: return "pl";
  }
  return "?";
}

inline std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::mass, Strategy::bel, Strategy::pl}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

struct SingletonSupport {
  std::string name;
  double bel = 0.0;
  double pl = 0.0;
};

/// Bel and Pl of every singleton, in frame order.
inline std::vector<SingletonSupport> singleton_table(const MassFunction& m) {
  std::vector<SingletonSupport> out;
  const auto& frame = m.frame();
  out.reserve(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    auto s = frame.singleton(i);
    out.push_back({frame.name(i), m.belief(s), m.plausibility(s)});
  }
  return out;
}

/// Uniformly random element of a non-empty set; the only randomness in decisions.
inline std::size_t random_element(const ElementSet& set, std::uint64_t seed) {
  auto idx = set.indices();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, idx.size() - 1);
  return idx[pick(rng)];
}

/// First non-empty focal element with the largest mass, if any.
inline std::optional<ElementSet> max_mass_focal(const MassFunction& m) {
  std::optional<ElementSet> best;
  double best_mass = -1.0;
  for (const auto& f : m.focal_elements()) {
    if (f.set.empty()) continue;
    if (f.mass > best_mass) {
      best = f.set;
      best_mass = f.mass;
    }
  }
  return best;
}

/// Picks one hypothesis from a fused mass function.
///
/// mass: the heaviest focal element; a multi-element winner yields a seeded
///       uniformly random member.
/// bel / pl: argmax over singletons; ties go to the lowest frame index.
inline std::string decide(const MassFunction& m, Strategy strategy, std::uint64_t seed = 0) {
  const auto& frame = m.frame();
  if (strategy == Strategy::mass) {
    auto top = max_mass_focal(m);
    if (!top) throw ValidationError("cannot decide: no non-empty focal element");
    return frame.name(top->is_singleton() ? top->indices().front() : random_element(*top, seed));
  }
  if (!max_mass_focal(m)) throw ValidationError("cannot decide: no non-empty focal element");
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    auto s = frame.singleton(i);
    double v = strategy == Strategy::bel ? m.belief(s) : m.plausibility(s);
    if (v > best_value) {
      best = i;
      best_value = v;
    }
  }
  return frame.name(best);
}

}  // namespace fnbt

#endif  // FNBT_DECISION_HPP
