#ifndef FNBT_FUSION_HPP
#define FNBT_FUSION_HPP

#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "fnbt/combination.hpp"
#include "fnbt/errors.hpp"
#include "fnbt/frame.hpp"
#include "fnbt/mass.hpp"

namespace fnbt {

/// Focal element of one source that is disjoint from every focal element of
/// another source, recorded for one of its elements.
struct Witness {
  std::size_t element = 0;  ///< index in the assessment's universe frame
  std::size_t source = 0;   ///< position of the witnessing source in the input list
  ElementSet focal;         ///< the witnessing focal element, over the universe frame
};

/// Result of the open-world criterion.
struct OpenWorldAssessment {
  Frame universe;                 ///< union of the input frames
  ElementSet upsilon;             ///< essential conflict set, over `universe`
  std::vector<Witness> witnesses; ///< one per element of `upsilon`, ascending element index

  bool is_open_world() const { return !upsilon.empty(); }
  /// Every hypothesis is essentially conflicting; no fusion is meaningful.
  bool is_total_contradiction() const { return upsilon == universe.full_set(); }
  std::vector<std::string> upsilon_names() const { return universe.names_of(upsilon); }
};

namespace detail {

inline Frame union_of_frames(std::span<const MassFunction> ms) {
  Frame out = ms.front().frame();
  for (std::size_t i = 1; i < ms.size(); ++i) out = union_frame(out, ms[i].frame());
  return out;
}

inline void require_sources(std::span<const MassFunction> ms) {
  if (ms.size() < 2) throw ValidationError("fusion needs at least two mass functions");
  for (const auto& m : ms) {
    if (m.mass(m.frame().empty_set()) > 0.0) {
      throw ValidationError("fusion inputs must not assign mass to the empty set");
    }
  }
}

}  // namespace detail

/// Essential conflict set over any number of sources.
///
/// ω belongs to Υ when some focal element A of a source contains ω and A is
/// disjoint from every focal element of some other source. Elements are
/// matched by name across frames; the result is the largest such set.
inline OpenWorldAssessment essential_conflict_set(std::span<const MassFunction> ms) {
  detail::require_sources(ms);
  Frame universe = detail::union_of_frames(ms);
  std::vector<MassFunction> embedded;
  embedded.reserve(ms.size());
  for (const auto& m : ms) embedded.push_back(m.embed_into(universe));

  std::vector<std::optional<Witness>> by_element(universe.size());
  for (std::size_t i = 0; i < embedded.size(); ++i) {
    for (const auto& a : embedded[i].focal_elements()) {
      bool isolated = false;
      for (std::size_t j = 0; j < embedded.size() && !isolated; ++j) {
        if (j == i) continue;
        isolated = true;
        for (const auto& b : embedded[j].focal_elements()) {
          if ((a.set.bits() & b.set.bits()) != 0) {
            isolated = false;
            break;
          }
        }
      }
      if (!isolated) continue;
      for (auto e : a.set.indices()) {
        if (!by_element[e]) by_element[e] = Witness{e, i, a.set};
      }
    }
  }

  OpenWorldAssessment out{universe, universe.empty_set(), {}};
  std::uint64_t bits = 0;
  for (const auto& w : by_element) {
    if (!w) continue;
    bits |= std::uint64_t{1} << w->element;
    out.witnesses.push_back(*w);
  }
  out.upsilon = ElementSet(bits, universe.id());
  return out;
}

inline OpenWorldAssessment essential_conflict_set(const MassFunction& m1, const MassFunction& m2) {
  const MassFunction pair[] = {m1, m2};
  return essential_conflict_set(pair);
}

/// Ω: union of the sources' effective frames, first source's order first.
inline Frame extended_effective_frame(std::span<const MassFunction> ms) {
  if (ms.empty()) throw ValidationError("no mass functions given");
  Frame omega = effective_subframe(ms.front());
  for (std::size_t i = 1; i < ms.size(); ++i) omega = union_frame(omega, effective_subframe(ms[i]));
  return omega;
}

inline Frame extended_effective_frame(const MassFunction& m1, const MassFunction& m2) {
  const MassFunction pair[] = {m1, m2};
  return extended_effective_frame(pair);
}

/// Full negation transform onto Ω.
///
/// A focal element A of m negates exactly the effective-frame elements it
/// leaves out, so on Ω it becomes Ω \ (Θ* \ A) = A ∪ (Ω \ Θ*). Masses are
/// carried over unchanged.
inline MassFunction full_negation_transform(const MassFunction& m, const Frame& omega) {
  if (m.mass(m.frame().empty_set()) > 0.0) {
    throw ValidationError("full negation transform requires m(empty set) = 0");
  }
  const auto effective = embed(m.effective_frame(), m.frame(), omega);
  const auto extension = omega.full_set() - effective;
  std::vector<Focal> out;
  out.reserve(m.focal_count());
  for (const auto& f : m.focal_elements()) out.push_back({embed(f.set, m.frame(), omega) | extension, f.mass});
  return MassFunction::create(omega, std::move(out));
}

/// Total mass the conjunctive rule sends to the empty set; k for two sources.
inline double conjunctive_conflict(std::span<const MassFunction> ms) {
  auto acc = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) acc = tbm_conjunctive(acc, ms[i]);
  return acc.mass(acc.frame().empty_set());
}

struct FusionReport {
  MassFunction fused;
  OpenWorldAssessment assessment;
  Frame omega;           ///< extended effective frame, or the union frame in a closed world
  double k_raw = 0.0;    ///< conflict of the inputs on the union frame
  double k_transformed = 0.0;
  Rule rule = Rule::dempster;
  std::vector<MassFunction> transformed_inputs;
};

/// FNBT over any number of sources.
///
/// Closed world (Υ = ∅): the inputs are embedded into the union frame and
/// combined as they are. Open world: every source is transformed against the
/// common Ω and the transformed functions are combined left to right.
/// Throws TotalConflict when Υ covers the whole union frame or when the
/// back-end rule cannot normalize.
inline FusionReport fnbt_fuse_many(std::span<const MassFunction> ms, Rule rule = Rule::dempster) {
  auto assessment = essential_conflict_set(ms);
  if (assessment.is_total_contradiction()) {
    throw TotalConflict("total contradiction: every hypothesis of " + assessment.universe.describe() +
                        " is essentially conflicting; the sources cannot be fused");
  }
  std::vector<MassFunction> embedded;
  embedded.reserve(ms.size());
  for (const auto& m : ms) embedded.push_back(m.embed_into(assessment.universe));
  const double k_raw = conjunctive_conflict(embedded);

  if (!assessment.is_open_world()) {
    auto fused = combine_all(rule, embedded);
    Frame omega = assessment.universe;
    return {std::move(fused), std::move(assessment), std::move(omega), k_raw, k_raw, rule, std::move(embedded)};
  }

  Frame omega = extended_effective_frame(ms);
  std::vector<MassFunction> transformed;
  transformed.reserve(ms.size());
  for (const auto& m : ms) transformed.push_back(full_negation_transform(m, omega));
  const double k_transformed = conjunctive_conflict(transformed);
  auto fused = combine_all(rule, transformed);
  return {std::move(fused), std::move(assessment), std::move(omega), k_raw, k_transformed, rule,
          std::move(transformed)};
}

inline FusionReport fnbt_fuse(const MassFunction& m1, const MassFunction& m2, Rule rule = Rule::dempster) {
  const MassFunction pair[] = {m1, m2};
  return fnbt_fuse_many(pair, rule);
}

}  // namespace fnbt

#endif  // FNBT_FUSION_HPP
