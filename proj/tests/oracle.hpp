#ifndef FNBT_TESTS_ORACLE_HPP
#define FNBT_TESTS_ORACLE_HPP

// Brute-force reference implementations over sets of names. They share no
// code with the library beyond converting to and from MassFunction, so a
// match is independent evidence that the bit-mask code is right.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fnbt/fnbt.hpp"

namespace oracle {

using NameSet = std::set<std::string>;
using NaiveMass = std::map<NameSet, double>;

inline NameSet intersect(const NameSet& a, const NameSet& b) {
  NameSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool subset(const NameSet& a, const NameSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline NaiveMass to_naive(const fnbt::MassFunction& m) {
  NaiveMass out;
  for (const auto& f : m.focal_elements()) {
    auto names = m.frame().names_of(f.set);
    out[NameSet(names.begin(), names.end())] += f.mass;
  }
  return out;
}

inline fnbt::MassFunction from_naive(const fnbt::Frame& frame, const NaiveMass& m,
                                     fnbt::EmptySetPolicy policy = fnbt::EmptySetPolicy::forbid) {
  std::vector<std::pair<std::vector<std::string>, double>> entries;
  for (const auto& [set, mass] : m) entries.push_back({{set.begin(), set.end()}, mass});
  return fnbt::MassFunction::from_names(frame, entries, policy);
}

inline double conflict(const NaiveMass& m1, const NaiveMass& m2) {
  double k = 0.0;
  for (const auto& [a, x] : m1) {
    for (const auto& [b, y] : m2) {
      if (intersect(a, b).empty()) k += x * y;
    }
  }
  return k;
}

inline NaiveMass conjunctive(const NaiveMass& m1, const NaiveMass& m2) {
  NaiveMass out;
  for (const auto& [a, x] : m1) {
    for (const auto& [b, y] : m2) out[intersect(a, b)] += x * y;
  }
  return out;
}

/// Empty map when k = 1.
inline NaiveMass dempster(const NaiveMass& m1, const NaiveMass& m2) {
  auto joint = conjunctive(m1, m2);
  const double k = joint.count({}) ? joint.at({}) : 0.0;
  joint.erase(NameSet{});
  if (joint.empty()) return {};
  for (auto& [set, mass] : joint) mass /= 1.0 - k;
  return joint;
}

inline NaiveMass yager(const NaiveMass& m1, const NaiveMass& m2, const NameSet& theta) {
  auto joint = conjunctive(m1, m2);
  if (auto it = joint.find({}); it != joint.end()) {
    const double k = it->second;
    joint.erase(it);
    joint[theta] += k;
  }
  return joint;
}

inline double belief(const NaiveMass& m, const NameSet& a) {
  double out = 0.0;
  for (const auto& [b, x] : m) {
    if (!b.empty() && subset(b, a)) out += x;
  }
  return out;
}

inline double plausibility(const NaiveMass& m, const NameSet& a) {
  double out = 0.0;
  for (const auto& [b, x] : m) {
    if (!intersect(a, b).empty()) out += x;
  }
  return out;
}

/// ω such that some focal element of one source contains ω and misses every
/// focal element of the other source.
inline NameSet essential_conflict(const NaiveMass& m1, const NaiveMass& m2) {
  NameSet out;
  auto scan = [&out](const NaiveMass& mine, const NaiveMass& other) {
    for (const auto& [a, x] : mine) {
      bool isolated = true;
      for (const auto& [b, y] : other) isolated = isolated && intersect(a, b).empty();
      if (isolated) out.insert(a.begin(), a.end());
    }
  };
  scan(m1, m2);
  scan(m2, m1);
  return out;
}

inline bool maps_equal(const NaiveMass& a, const NaiveMass& b, double tol = 1e-9) {
  auto covers = [tol](const NaiveMass& x, const NaiveMass& y) {
    for (const auto& [set, mass] : x) {
      auto it = y.find(set);
      const double other = it == y.end() ? 0.0 : it->second;
      if (std::abs(mass - other) > tol) return false;
    }
    return true;
  };
  return covers(a, b) && covers(b, a);
}

/// Seeded source of small random frames and mass functions.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

  /// Frame of 2..5 names drawn from {a,b,c,d,e,f,g}, in random order.
  fnbt::Frame frame() {
    std::vector<std::string> pool{"a", "b", "c", "d", "e", "f", "g"};
    std::shuffle(pool.begin(), pool.end(), rng_);
    pool.resize(uniform(2, 5));
    return fnbt::Frame(pool);
  }

  /// Up to `max_focals` distinct non-empty focal sets; every focal contains
  /// `anchor` when one is given.
  NaiveMass mass(const fnbt::Frame& frame, std::size_t max_focals = 6, const std::string* anchor = nullptr) {
    const auto& names = frame.names();
    const std::uint64_t subsets = (std::uint64_t{1} << names.size()) - 1;
    const std::size_t count = uniform(1, std::min<std::size_t>(max_focals, subsets));
    NaiveMass out;
    std::size_t attempts = 0;
    while (out.size() < count && attempts++ < 200) {
      const std::uint64_t bits = std::uniform_int_distribution<std::uint64_t>(1, subsets)(rng_);
      NameSet set;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if ((bits >> i) & 1U) set.insert(names[i]);
      }
      if (anchor) set.insert(*anchor);
      if (!out.count(set)) out[set] = 0.05 + unit();
    }
    double total = 0.0;
    for (const auto& [set, m] : out) total += m;
    for (auto& [set, m] : out) m /= total;
    return out;
  }

  fnbt::MassFunction mass_function(const fnbt::Frame& frame, std::size_t max_focals = 6) {
    return from_naive(frame, mass(frame, max_focals));
  }

  /// Two mass functions on independently drawn frames. One pair in three is
  /// built closed-world by forcing a shared element into every focal set.
  std::pair<fnbt::MassFunction, fnbt::MassFunction> pair() {
    auto f1 = frame();
    auto f2 = frame();
    if (uniform(0, 2) == 0) {
      const std::string anchor = f1.names().front();
      if (!f2.contains(anchor)) {
        auto names = f2.names();
        names.back() = anchor;
        f2 = fnbt::Frame(names);
      }
      return {from_naive(f1, mass(f1, 6, &anchor)), from_naive(f2, mass(f2, 6, &anchor))};
    }
    return {from_naive(f1, mass(f1)), from_naive(f2, mass(f2))};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // FNBT_TESTS_ORACLE_HPP
