#ifndef FNBT_COMBINATION_HPP
#define FNBT_COMBINATION_HPP

#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fnbt/errors.hpp"
#include "fnbt/mass.hpp"

namespace fnbt {

/// Dempster's rule refuses to normalize once k reaches 1 - kTotalConflictMargin.
inline constexpr double kTotalConflictMargin = 1e-12;

struct ConflictingPair {
  ElementSet a;
  ElementSet b;
  double product = 0.0;
};

/// Classical conflict coefficient k and the disjoint focal pairs producing it.
struct ConflictProfile {
  double k = 0.0;
  std::vector<ConflictingPair> conflicting_pairs;
};

namespace detail {

inline void require_same_frame(const MassFunction& m1, const MassFunction& m2, std::string_view rule) {
  if (!(m1.frame() == m2.frame())) {
    throw FrameMismatch(std::string(rule) + ": operands live on different frames " + m1.frame().describe() +
                        " and " + m2.frame().describe() + "; embed them into a common frame first");
  }
}

/// Unnormalized conjunctive products keyed by intersection bits; key 0 is the empty set.
inline std::map<std::uint64_t, double> conjunctive_products(const MassFunction& m1, const MassFunction& m2) {
  std::map<std::uint64_t, double> out;
  for (const auto& a : m1.focal_elements()) {
    for (const auto& b : m2.focal_elements()) out[a.set.bits() & b.set.bits()] += a.mass * b.mass;
  }
  return out;
}

inline std::vector<Focal> to_focals(const Frame& frame, const std::map<std::uint64_t, double>& products,
                                    double scale = 1.0) {
  std::vector<Focal> out;
  out.reserve(products.size());
  for (const auto& [bits, mass] : products) out.push_back({ElementSet(bits, frame.id()), mass * scale});
  return out;
}

}  // namespace detail

inline ConflictProfile conflict(const MassFunction& m1, const MassFunction& m2) {
  detail::require_same_frame(m1, m2, "conflict");
  ConflictProfile profile;
  for (const auto& a : m1.focal_elements()) {
    for (const auto& b : m2.focal_elements()) {
      if ((a.set.bits() & b.set.bits()) == 0) {
        double p = a.mass * b.mass;
        profile.k += p;
        profile.conflicting_pairs.push_back({a.set, b.set, p});
      }
    }
  }
  return profile;
}

/// Dempster's rule: conjunctive combination renormalized by 1 - k.
///
/// The normalizer is summed from the surviving products rather than taken as
/// 1 - k, which keeps the result exact to rounding when k is close to 1.
inline MassFunction dempster(const MassFunction& m1, const MassFunction& m2) {
  detail::require_same_frame(m1, m2, "dempster");
  auto products = detail::conjunctive_products(m1, m2);
  double k = 0.0;
  if (auto it = products.find(0); it != products.end()) {
    k = it->second;
    products.erase(it);
  }
  if (k >= 1.0 - kTotalConflictMargin || products.empty()) {
    std::ostringstream os;
    os << "total conflict (k=" << k << "): Dempster's rule is undefined for totally contradictory evidence";
    throw TotalConflict(os.str(), k);
  }
  double kept = 0.0;
  for (const auto& [bits, mass] : products) kept += mass;
  return MassFunction::create(m1.frame(), detail::to_focals(m1.frame(), products, 1.0 / kept));
}

/// Yager's rule: conflict mass is moved to the whole frame instead of renormalizing.
inline MassFunction yager(const MassFunction& m1, const MassFunction& m2) {
  detail::require_same_frame(m1, m2, "yager");
  auto products = detail::conjunctive_products(m1, m2);
  if (auto it = products.find(0); it != products.end()) {
    double k = it->second;
    products.erase(it);
    products[m1.frame().full_set().bits()] += k;
  }
  return MassFunction::create(m1.frame(), detail::to_focals(m1.frame(), products));
}

/// TBM unnormalized conjunctive rule; the conflict stays on the empty set.
inline MassFunction tbm_conjunctive(const MassFunction& m1, const MassFunction& m2) {
  detail::require_same_frame(m1, m2, "tbm");
  auto products = detail::conjunctive_products(m1, m2);
  return MassFunction::create(m1.frame(), detail::to_focals(m1.frame(), products), EmptySetPolicy::allow_empty);
}

/// Modified generalized combination rule.
///
/// m(∅) = m1(∅)·m2(∅); every non-empty x receives (1 - m(∅)) times its
/// conjunctive product share among the non-empty intersections. With inputs
/// free of empty-set mass the normalizer is 1 - k and the rule coincides with
/// Dempster's.
inline MassFunction mgcr(const MassFunction& m1, const MassFunction& m2) {
  detail::require_same_frame(m1, m2, "mgcr");
  const auto empty = m1.frame().empty_set();
  const double empty_mass = m1.mass(empty) * m2.mass(empty);
  auto products = detail::conjunctive_products(m1, m2);
  products.erase(0);
  double normalizer = 0.0;
  for (const auto& [bits, mass] : products) normalizer += mass;

  std::vector<Focal> focals;
  if (empty_mass > 0.0) focals.push_back({empty, empty_mass});
  if (empty_mass < 1.0) {
    if (normalizer <= kTotalConflictMargin) {
      throw TotalConflict("total conflict: mGCR has no non-empty intersection to carry the remaining mass",
                          1.0 - normalizer);
    }
    for (const auto& [bits, mass] : products) {
      focals.push_back({ElementSet(bits, m1.frame().id()), (1.0 - empty_mass) * mass / normalizer});
    }
  }
  return MassFunction::create(m1.frame(), std::move(focals), EmptySetPolicy::allow_empty);
}

/// Murphy's averaging: the mean mass function combined with itself n - 1 times.
inline MassFunction murphy_average(std::span<const MassFunction> ms) {
  if (ms.size() < 2) throw ValidationError("murphy averaging needs at least two mass functions");
  const auto& frame = ms.front().frame();
  std::map<std::uint64_t, double> sum;
  for (const auto& m : ms) {
    detail::require_same_frame(ms.front(), m, "murphy");
    for (const auto& f : m.focal_elements()) sum[f.set.bits()] += f.mass;
  }
  auto mean = MassFunction::create(frame, detail::to_focals(frame, sum, 1.0 / static_cast<double>(ms.size())));
  auto result = mean;
  for (std::size_t i = 1; i < ms.size(); ++i) result = dempster(result, mean);
  return result;
}

/// Closed-world combination rules usable as baselines or as the FNBT back-end.
enum class Rule { dempster, yager, tbm, mgcr, murphy };

inline constexpr std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::dempster: return "dempster";
    case Rule::yager: return "yager";
    case Rule::tbm: return "tbm";
    case Rule::mgcr: return "mgcr";
    case Rule::murphy: return "murphy";
  }
  return "?";
}

inline std::optional<Rule> parse_rule(std::string_view name) {
  for (Rule r : {Rule::dempster, Rule::yager, Rule::tbm, Rule::mgcr, Rule::murphy}) {
    if (name == to_string(r)) return r;
  }
  return std::nullopt;
}

inline MassFunction combine(Rule rule, const MassFunction& m1, const MassFunction& m2) {
  switch (rule) {
    case Rule::dempster: return dempster(m1, m2);
    case Rule::yager: return yager(m1, m2);
    case Rule::tbm: return tbm_conjunctive(m1, m2);
    case Rule::mgcr: return mgcr(m1, m2);
    case Rule::murphy: {
      const MassFunction pair[] = {m1, m2};
      return murphy_average(pair);
    }
  }
  throw Error("unknown rule");
}

/// Folds `rule` left to right; murphy averages the whole list at once.
inline MassFunction combine_all(Rule rule, std::span<const MassFunction> ms) {
  if (ms.empty()) throw ValidationError("nothing to combine");
  if (rule == Rule::murphy && ms.size() >= 2) return murphy_average(ms);
  auto result = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) result = combine(rule, result, ms[i]);
  return result;
}

/// Both operands placed on the union of their frames.
inline std::pair<MassFunction, MassFunction> align(const MassFunction& m1, const MassFunction& m2) {
  auto frame = union_frame(m1.frame(), m2.frame());
  return {m1.embed_into(frame), m2.embed_into(frame)};
}

}  // namespace fnbt

#endif  // FNBT_COMBINATION_HPP
