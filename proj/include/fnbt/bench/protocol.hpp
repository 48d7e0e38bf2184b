#ifndef FNBT_BENCH_PROTOCOL_HPP
#define FNBT_BENCH_PROTOCOL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fnbt/bench/dataset.hpp"
#include "fnbt/bpa.hpp"
#include "fnbt/errors.hpp"
#include "fnbt/frame.hpp"

namespace fnbt::bench {

inline constexpr std::uint64_t kDefaultSeed = 20250101;

/// Independent RNG streams derived from the master seed.
enum class Stream : std::uint64_t { folds = 1, holdout = 2, split = 3, smote = 4, sample = 5 };

/// Engine for one (seed, stream, tags...) coordinate. Runs that visit the same
/// coordinates draw the same numbers regardless of evaluation order.
inline std::mt19937_64 make_rng(std::uint64_t seed, Stream stream, std::initializer_list<std::uint64_t> tags = {}) {
  std::vector<std::uint32_t> words;
  auto push = [&words](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(seed);
  push(static_cast<std::uint64_t>(stream));
  for (auto t : tags) push(t);
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

inline std::uint64_t derive_seed(std::uint64_t seed, Stream stream, std::initializer_list<std::uint64_t> tags = {}) {
  return make_rng(seed, stream, tags)();
}

inline std::vector<std::vector<std::size_t>> rows_by_class(std::span<const LabeledRow> rows,
                                                           const std::vector<std::string>& classes) {
  std::vector<std::vector<std::size_t>> out(classes.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto it = std::find(classes.begin(), classes.end(), rows[i].label);
    if (it == classes.end()) throw DataError("row label '" + rows[i].label + "' is not a known class");
    out[static_cast<std::size_t>(it - classes.begin())].push_back(i);
  }
  return out;
}

/// Stratified fold id per row: each class is shuffled and dealt round-robin,
/// continuing the deal across classes so fold sizes differ by at most one.
inline std::vector<std::size_t> stratified_folds(const Dataset& ds, std::size_t folds, std::uint64_t seed) {
  if (folds < 2) throw DataError("need at least 2 folds");
  auto rng = make_rng(seed, Stream::folds);
  std::vector<std::size_t> fold_of(ds.rows.size(), 0);
  std::size_t deal = 0;
  for (auto& members : rows_by_class(ds.rows, ds.class_names)) {
    std::shuffle(members.begin(), members.end(), rng);
    for (auto i : members) fold_of[i] = deal++ % folds;
  }
  return fold_of;
}

/// Stratified holdout: round(test_fraction * n_c) rows of each class go to test.
inline std::vector<bool> stratified_holdout(const Dataset& ds, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) throw DataError("test fraction must lie in (0, 1)");
  auto rng = make_rng(seed, Stream::holdout);
  std::vector<bool> is_test(ds.rows.size(), false);
  for (auto& members : rows_by_class(ds.rows, ds.class_names)) {
    std::shuffle(members.begin(), members.end(), rng);
    auto n_test = static_cast<std::size_t>(std::lround(test_fraction * static_cast<double>(members.size())));
    for (std::size_t i = 0; i < n_test && i < members.size(); ++i) is_test[members[i]] = true;
  }
  return is_test;
}

/// Two sample-disjoint training sources with partially overlapping class sets.
struct HeterogeneousSplit {
  std::vector<LabeledRow> source_a;  ///< all of class a, first half of class b
  std::vector<LabeledRow> source_b;  ///< second half of class b, all of class c
  Frame frame_a;                     ///< {a, b}
  Frame frame_b;                     ///< {b, c}
};

/// Class b rows are shuffled and the first ceil(n_b / 2) go to source A.
inline HeterogeneousSplit make_heterogeneous_split(std::span<const LabeledRow> train,
                                                   const std::vector<std::string>& class_order,
                                                   std::uint64_t seed) {
  if (class_order.size() != 3) throw DataError("the heterogeneous protocol needs exactly 3 classes");
  auto by_class = rows_by_class(train, class_order);
  for (std::size_t c = 0; c < 3; ++c) {
    if (by_class[c].empty()) throw DataError("class '" + class_order[c] + "' is absent from the training rows");
  }
  auto rng = make_rng(seed, Stream::split);
  auto& middle = by_class[1];
  std::shuffle(middle.begin(), middle.end(), rng);
  const std::size_t to_a = (middle.size() + 1) / 2;

  HeterogeneousSplit out{{}, {}, Frame({class_order[0], class_order[1]}), Frame({class_order[1], class_order[2]})};
  for (auto i : by_class[0]) out.source_a.push_back(train[i]);
  for (std::size_t j = 0; j < middle.size(); ++j) (j < to_a ? out.source_a : out.source_b).push_back(train[middle[j]]);
  for (auto i : by_class[2]) out.source_b.push_back(train[i]);
  return out;
}

/// SMOTE: grows every minority class to the majority count.
///
/// Each synthetic row interpolates between a random member of the class and
/// one of its k nearest same-class neighbours (Euclidean) with a uniform(0,1)
/// factor. k is clamped to class size - 1. Original rows come first, in order.
inline std::vector<LabeledRow> smote_balance(std::span<const LabeledRow> rows, const std::vector<std::string>& classes,
                                             std::size_t k, std::uint64_t seed) {
  if (k < 1) throw DataError("SMOTE needs k >= 1");
  auto by_class = rows_by_class(rows, classes);
  std::size_t majority = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (by_class[c].size() < 2) {
      throw DataError("SMOTE needs at least 2 rows of class '" + classes[c] + "'");
    }
    majority = std::max(majority, by_class[c].size());
  }
  std::vector<LabeledRow> out(rows.begin(), rows.end());
  auto distance2 = [](const std::vector<double>& x, const std::vector<double>& y) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] - y[i]) * (x[i] - y[i]);
    return d;
  };
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& members = by_class[c];
    if (members.size() == majority) continue;
    const std::size_t kk = std::min(k, members.size() - 1);

    std::vector<std::vector<std::size_t>> neighbours(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::vector<std::pair<double, std::size_t>> d;
      d.reserve(members.size() - 1);
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j != i) d.emplace_back(distance2(rows[members[i]].values, rows[members[j]].values), j);
      }
      std::partial_sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(kk), d.end());
      for (std::size_t n = 0; n < kk; ++n) neighbours[i].push_back(d[n].second);
    }

    auto rng = make_rng(seed, Stream::smote, {c});
    std::uniform_int_distribution<std::size_t> pick_row(0, members.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_neighbour(0, kk - 1);
    std::uniform_real_distribution<double> gap(0.0, 1.0);
    for (std::size_t s = members.size(); s < majority; ++s) {
      const std::size_t i = pick_row(rng);
      const auto& base = rows[members[i]].values;
      const auto& other = rows[members[neighbours[i][pick_neighbour(rng)]]].values;
      const double t = gap(rng);
      LabeledRow synthetic{std::vector<double>(base.size()), classes[c]};
      for (std::size_t a = 0; a < base.size(); ++a) synthetic.values[a] = base[a] + t * (other[a] - base[a]);
      out.push_back(std::move(synthetic));
    }
  }
  return out;
}

}  // namespace fnbt::bench

#endif  // FNBT_BENCH_PROTOCOL_HPP
