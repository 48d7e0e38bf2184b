#ifndef FNBT_DIAGNOSTICS_HPP
#define FNBT_DIAGNOSTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fnbt/combination.hpp"
#include "fnbt/fusion.hpp"
#include "fnbt/mass.hpp"

namespace fnbt {

/// Pathologies of Dempster's rule on an open-world pair.
///
/// `absolutized` lists hypotheses some source found plausible that the fused
/// result rules out entirely. `consensus` is (U1 ∪ U2) \ Υ, with U_i the
/// effective frame of source i; Dempster's rule locks all plausibility there.
struct DempsterPathology {
  OpenWorldAssessment assessment;
  std::vector<std::string> absolutized;
  ElementSet consensus;             ///< over assessment.universe
  double consensus_plausibility = 0.0;
};

/// Hypotheses with Pl_i(ω) > 0 for some input but Pl(ω) = 0 in `fused`.
/// Inputs and `fused` may live on different frames; elements match by name.
inline std::vector<std::string> absolutized_hypotheses(std::span<const MassFunction> inputs,
                                                       const MassFunction& fused) {
  std::vector<std::string> out;
  const Frame universe = detail::union_of_frames(inputs);
  for (const auto& name : universe.names()) {
    bool plausible_before = false;
    for (const auto& m : inputs) {
      if (auto i = m.frame().find(name); i && m.plausibility(m.frame().singleton(*i)) > 0.0) {
        plausible_before = true;
      }
    }
    auto j = fused.frame().find(name);
    double after = j ? fused.plausibility(fused.frame().singleton(*j)) : 0.0;
    if (plausible_before && after == 0.0) out.push_back(name);
  }
  return out;
}

/// Pl of a named set under m; names outside m's frame contribute nothing.
inline double plausibility_of_names(const MassFunction& m, const std::vector<std::string>& names) {
  std::vector<std::string> present;
  for (const auto& n : names) {
    if (m.frame().contains(n)) present.push_back(n);
  }
  return m.plausibility(m.frame().set_of(present));
}

/// Runs Dempster's rule on the union-frame embeddings and reports its pathologies.
/// Throws TotalConflict when Dempster's rule itself is undefined.
inline DempsterPathology diagnose_dempster(const MassFunction& m1, const MassFunction& m2) {
  const MassFunction pair[] = {m1, m2};
  auto assessment = essential_conflict_set(pair);
  const auto& universe = assessment.universe;
  auto fused = dempster(m1.embed_into(universe), m2.embed_into(universe));
  auto consensus = (embed(m1.effective_frame(), m1.frame(), universe) |
                    embed(m2.effective_frame(), m2.frame(), universe)) -
                   assessment.upsilon;
  double pl = fused.plausibility(consensus);
  auto absolutized = absolutized_hypotheses(pair, fused);
  return {std::move(assessment), std::move(absolutized), consensus, pl};
}

}  // namespace fnbt

#endif  // FNBT_DIAGNOSTICS_HPP
