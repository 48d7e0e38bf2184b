#ifndef FNBT_BENCH_METRICS_HPP
#define FNBT_BENCH_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <tuple>
#include <string>
#include <vector>

#include "fnbt/errors.hpp"

namespace fnbt::bench {

/// Rows are true classes; columns are predicted classes followed by one EMPTY
/// column for samples that received no class (empty-set decision or total conflict).
struct ConfusionMatrix {
  std::vector<std::string> classes;
  std::vector<std::vector<std::size_t>> counts;

  explicit ConfusionMatrix(std::vector<std::string> class_names = {})
      : classes(std::move(class_names)),
        counts(classes.size(), std::vector<std::size_t>(classes.size() + 1, 0)) {}

  std::size_t empty_column() const { return classes.size(); }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& row : counts) {
      for (auto v : row) t += v;
    }
    return t;
  }
  std::size_t trace() const {
    std::size_t t = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) t += counts[i][i];
    return t;
  }
  std::size_t empty_predictions() const {
    std::size_t t = 0;
    for (const auto& row : counts) t += row.back();
    return t;
  }
  ConfusionMatrix& operator+=(const ConfusionMatrix& other) {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      for (std::size_t j = 0; j < counts[i].size(); ++j) counts[i][j] += other.counts[i][j];
    }
    return *this;
  }
};

/// One evaluation; accuracy and macro-F1 are fractions in [0, 1].
struct FoldMetrics {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  ConfusionMatrix confusion;
};

/// Aggregate over folds; means and sample standard deviations in percent.
struct EvalMetrics {
  std::vector<FoldMetrics> folds;
  double accuracy_mean = 0.0;
  double accuracy_std = 0.0;
  double macro_f1_mean = 0.0;
  double macro_f1_std = 0.0;
  ConfusionMatrix confusion;  ///< summed over folds
};

/// Accuracy and macro-F1 of one prediction list. A missing prediction is
/// always wrong and lands in the EMPTY column; per-class F1 is 0 when
/// precision + recall is 0.
inline FoldMetrics metrics(std::span<const std::string> y_true, std::span<const std::optional<std::string>> y_pred,
                           const std::vector<std::string>& classes) {
  if (y_true.size() != y_pred.size()) {
    throw DataError("metrics: " + std::to_string(y_true.size()) + " labels but " + std::to_string(y_pred.size()) +
                    " predictions");
  }
  auto index_of = [&classes](const std::string& label) {
    auto it = std::find(classes.begin(), classes.end(), label);
    if (it == classes.end()) throw DataError("metrics: unknown class '" + label + "'");
    return static_cast<std::size_t>(it - classes.begin());
  };
  FoldMetrics out{0.0, 0.0, ConfusionMatrix(classes)};
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const auto t = index_of(y_true[i]);
    const auto p = y_pred[i] ? index_of(*y_pred[i]) : out.confusion.empty_column();
    ++out.confusion.counts[t][p];
  }
  const auto total = out.confusion.total();
  out.accuracy = total == 0 ? 0.0 : static_cast<double>(out.confusion.trace()) / static_cast<double>(total);

  double f1_sum = 0.0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::size_t predicted = 0;
    std::size_t actual = 0;
    for (std::size_t r = 0; r < classes.size(); ++r) predicted += out.confusion.counts[r][c];
    for (auto v : out.confusion.counts[c]) actual += v;
    const double tp = static_cast<double>(out.confusion.counts[c][c]);
    const double precision = predicted == 0 ? 0.0 : tp / static_cast<double>(predicted);
    const double recall = actual == 0 ? 0.0 : tp / static_cast<double>(actual);
    f1_sum += precision + recall == 0.0 ? 0.0 : 2.0 * precision * recall / (precision + recall);
  }
  out.macro_f1 = classes.empty() ? 0.0 : f1_sum / static_cast<double>(classes.size());
  return out;
}

inline EvalMetrics aggregate(std::vector<FoldMetrics> folds) {
  EvalMetrics out;
  if (folds.empty()) return out;
  out.confusion = ConfusionMatrix(folds.front().confusion.classes);
  auto mean_std = [&folds](auto field) {
    const double n = static_cast<double>(folds.size());
    double mean = 0.0;
    for (const auto& f : folds) mean += 100.0 * field(f);
    mean /= n;
    double ss = 0.0;
    for (const auto& f : folds) ss += (100.0 * field(f) - mean) * (100.0 * field(f) - mean);
    return std::pair{mean, folds.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0};
  };
  std::tie(out.accuracy_mean, out.accuracy_std) = mean_std([](const FoldMetrics& f) { return f.accuracy; });
  std::tie(out.macro_f1_mean, out.macro_f1_std) = mean_std([](const FoldMetrics& f) { return f.macro_f1; });
  for (const auto& f : folds) out.confusion += f.confusion;
  out.folds = std::move(folds);
  return out;
}

}  // namespace fnbt::bench

#endif  // FNBT_BENCH_METRICS_HPP
