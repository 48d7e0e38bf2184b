#ifndef FNBT_MASS_HPP
#define FNBT_MASS_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fnbt/errors.hpp"
#include "fnbt/frame.hpp"

namespace fnbt {

/// Sum-to-one tolerance. Inputs inside it are renormalized exactly.
inline constexpr double kMassTolerance = 1e-9;

struct Focal {
  ElementSet set;
  double mass = 0.0;
};

/// Whether the empty set may carry mass. Only conjunctive rules that keep the
/// conflict on the empty set (TBM, mGCR) produce `allow_empty` functions.
enum class EmptySetPolicy { forbid, allow_empty };

struct Violation {
  enum class Kind { non_finite, negative_mass, empty_set_mass, sum_mismatch, foreign_set };
  Kind kind;
  std::string message;
};

/// Checks a raw list of assignments against the mass-function axioms.
/// Duplicated subsets are summed before checking.
inline std::optional<Violation> validate(const Frame& frame, std::span<const Focal> entries,
                                         EmptySetPolicy policy = EmptySetPolicy::forbid) {
  double sum = 0.0;
  for (const auto& e : entries) {
    if (e.set.frame_id() != frame.id()) {
      return Violation{Violation::Kind::foreign_set, "assignment to a subset of another frame"};
    }
    if (!std::isfinite(e.mass)) return Violation{Violation::Kind::non_finite, "non-finite mass"};
    if (e.mass < 0.0) {
      std::ostringstream os;
      os << "negative mass " << e.mass << " on " << frame.format(e.set);
      return Violation{Violation::Kind::negative_mass, os.str()};
    }
    if (e.set.empty() && e.mass > 0.0 && policy == EmptySetPolicy::forbid) {
      std::ostringstream os;
      os << "empty set carries mass " << e.mass;
      return Violation{Violation::Kind::empty_set_mass, os.str()};
    }
    sum += e.mass;
  }
  if (std::abs(sum - 1.0) > kMassTolerance) {
    std::ostringstream os;
    os << "sum=" << sum;
    return Violation{Violation::Kind::sum_mismatch, os.str()};
  }
  return std::nullopt;
}

/// A basic probability assignment over one frame.
///
/// Focal elements are stored sparsely in ascending bit-pattern order; zero
/// masses are never stored. Instances are immutable once built.
class MassFunction {
 public:
  /// Merges duplicate subsets, drops zero masses, validates and renormalizes.
  /// Throws ValidationError with the violation text on failure.
  static MassFunction create(Frame frame, std::vector<Focal> entries,
                             EmptySetPolicy policy = EmptySetPolicy::forbid) {
    if (auto v = validate(frame, entries, policy)) throw ValidationError(v->message);
    std::map<std::uint64_t, double> merged;
    for (const auto& e : entries) merged[e.set.bits()] += e.mass;
    double sum = 0.0;
    for (const auto& [bits, mass] : merged) sum += mass;
    MassFunction m(std::move(frame), policy);
    for (const auto& [bits, mass] : merged) {
      if (mass > 0.0) m.focals_.push_back({ElementSet(bits, m.frame_.id()), mass / sum});
    }
    return m;
  }

  /// Convenience for literals: `{{{"a"}, 0.9}, {{"b"}, 0.1}}`.
  static MassFunction from_names(Frame frame,
                                 const std::vector<std::pair<std::vector<std::string>, double>>& entries,
                                 EmptySetPolicy policy = EmptySetPolicy::forbid) {
    std::vector<Focal> focals;
    focals.reserve(entries.size());
    for (const auto& [names, mass] : entries) focals.push_back({frame.set_of(names), mass});
    return create(std::move(frame), std::move(focals), policy);
  }

  /// m(Θ) = 1, total ignorance.
  static MassFunction vacuous(Frame frame) {
    auto full = frame.full_set();
    return create(std::move(frame), {{full, 1.0}});
  }

  const Frame& frame() const { return frame_; }
  bool allows_empty() const { return policy_ == EmptySetPolicy::allow_empty; }
  EmptySetPolicy policy() const { return policy_; }

  /// Focal elements (positive mass) in ascending bit-pattern order.
  std::span<const Focal> focal_elements() const { return focals_; }
  std::size_t focal_count() const { return focals_.size(); }

  double mass(const ElementSet& set) const {
    frame_.own(set);
    auto it = std::lower_bound(focals_.begin(), focals_.end(), set.bits(),
                               [](const Focal& f, std::uint64_t b) { return f.set.bits() < b; });
    return it != focals_.end() && it->set.bits() == set.bits() ? it->mass : 0.0;
  }
  double mass(const std::vector<std::string>& names) const { return mass(frame_.set_of(names)); }

  /// Bel(A): mass of all non-empty focal subsets of A.
  double belief(const ElementSet& a) const {
    frame_.own(a);
    double total = 0.0;
    for (const auto& f : focals_) {
      if (!f.set.empty() && (f.set.bits() & ~a.bits()) == 0) total += f.mass;
    }
    return total;
  }

  /// Pl(A): mass of all focal elements intersecting A.
  double plausibility(const ElementSet& a) const {
    frame_.own(a);
    double total = 0.0;
    for (const auto& f : focals_) {
      if ((f.set.bits() & a.bits()) != 0) total += f.mass;
    }
    return total;
  }

  /// Union of the focal elements: the hypotheses this source entertains.
  ElementSet effective_frame() const {
    std::uint64_t bits = 0;
    for (const auto& f : focals_) bits |= f.set.bits();
    return {bits, frame_.id()};
  }

  /// Same named focal elements placed on a frame that contains them all.
  MassFunction embed_into(const Frame& target) const {
    if (target == frame_) return *this;
    std::vector<Focal> out;
    out.reserve(focals_.size());
    for (const auto& f : focals_) out.push_back({fnbt::embed(f.set, frame_, target), f.mass});
    return create(target, std::move(out), policy_);
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& f : focals_) {
      if (!first) os << ", ";
      os << frame_.format(f.set) << ':' << f.mass;
      first = false;
    }
    return os.str();
  }

 private:
  MassFunction(Frame frame, EmptySetPolicy policy) : frame_(std::move(frame)), policy_(policy) {}

  Frame frame_;
  EmptySetPolicy policy_;
  std::vector<Focal> focals_;
};

/// Re-checks an already constructed function, e.g. after deserialization.
inline std::optional<Violation> validate(const MassFunction& m) {
  return validate(m.frame(), m.focal_elements(), m.policy());
}

inline double belief(const MassFunction& m, const ElementSet& a) { return m.belief(a); }
inline double plausibility(const MassFunction& m, const ElementSet& a) { return m.plausibility(a); }
inline std::span<const Focal> focal_elements(const MassFunction& m) { return m.focal_elements(); }
inline ElementSet effective_frame(const MassFunction& m) { return m.effective_frame(); }

/// The effective frame as a frame of its own, in the parent frame's order.
inline Frame effective_subframe(const MassFunction& m) {
  return Frame(m.frame().names_of(m.effective_frame()));
}

/// Focal maps equal within `tol`, compared by element names.
inline bool same_focal_map(const MassFunction& a, const MassFunction& b, double tol = kMassTolerance) {
  auto key = [](const MassFunction& m, const ElementSet& s) {
    auto names = m.frame().names_of(s);
    std::sort(names.begin(), names.end());
    return names;
  };
  std::map<std::vector<std::string>, double> lhs;
  std::map<std::vector<std::string>, double> rhs;
  for (const auto& f : a.focal_elements()) lhs[key(a, f.set)] = f.mass;
  for (const auto& f : b.focal_elements()) rhs[key(b, f.set)] = f.mass;
  for (const auto& [k, v] : lhs) {
    auto it = rhs.find(k);
    if (std::abs(v - (it == rhs.end() ? 0.0 : it->second)) > tol) return false;
  }
  for (const auto& [k, v] : rhs) {
    if (!lhs.contains(k) && std::abs(v) > tol) return false;
  }
  return true;
}

}  // namespace fnbt

#endif  // FNBT_MASS_HPP
