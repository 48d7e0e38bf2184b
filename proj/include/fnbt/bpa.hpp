#ifndef FNBT_BPA_HPP
#define FNBT_BPA_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "fnbt/errors.hpp"
#include "fnbt/frame.hpp"
#include "fnbt/mass.hpp"

namespace fnbt {

/// Lower bound on fitted standard deviations.
inline constexpr double kMinStddev = 1e-6;
/// Memberships below this are treated as underflow.
inline constexpr double kMembershipFloor = 1e-12;

/// One numeric observation and its class label.
struct LabeledRow {
  std::vector<double> values;
  std::string label;
};

struct GaussianMembership {
  double mean = 0.0;
  double stddev = 1.0;

  double operator()(double x) const {
    const double z = (x - mean) / stddev;
    return std::exp(-0.5 * z * z);
  }
};

/// Per-attribute, per-class Gaussian membership models of one training source.
class AttributeModelSet {
 public:
  AttributeModelSet(Frame classes, std::size_t n_attributes, std::vector<GaussianMembership> models)
      : classes_(std::move(classes)), n_attributes_(n_attributes), models_(std::move(models)) {
    if (models_.size() != n_attributes_ * classes_.size()) throw ValidationError("model table has the wrong size");
  }

  const Frame& classes() const { return classes_; }
  std::size_t attribute_count() const { return n_attributes_; }
  const GaussianMembership& at(std::size_t attribute, std::size_t class_index) const {
    return models_.at(attribute * classes_.size() + class_index);
  }

 private:
  Frame classes_;
  std::size_t n_attributes_;
  std::vector<GaussianMembership> models_;  // attribute-major
};

/// Sample mean and (n - 1) standard deviation per attribute and class.
/// Every class of `classes` needs at least two rows; all labels must belong to it.
inline AttributeModelSet fit_attribute_models(std::span<const LabeledRow> rows, const Frame& classes) {
  if (rows.empty()) throw DataError("no training rows");
  const std::size_t n = rows.front().values.size();
  const std::size_t c = classes.size();
  std::vector<std::size_t> counts(c, 0);
  std::vector<double> sums(n * c, 0.0);
  std::vector<std::size_t> class_of;
  class_of.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.values.size() != n) throw DataError("training rows have inconsistent attribute counts");
    auto k = classes.find(row.label);
    if (!k) throw DataError("label '" + row.label + "' is not in frame " + classes.describe());
    for (std::size_t a = 0; a < n; ++a) {
      if (!std::isfinite(row.values[a])) throw DataError("non-numeric attribute value in training rows");
      sums[a * c + *k] += row.values[a];
    }
    ++counts[*k];
    class_of.push_back(*k);
  }
  for (std::size_t k = 0; k < c; ++k) {
    if (counts[k] < 2) {
      throw DataError("class '" + classes.name(k) + "' has " + std::to_string(counts[k]) +
                      " training rows; at least 2 are required");
    }
  }
  std::vector<GaussianMembership> models(n * c);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t k = 0; k < c; ++k) models[a * c + k].mean = sums[a * c + k] / static_cast<double>(counts[k]);
  }
  std::vector<double> squares(n * c, 0.0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t a = 0; a < n; ++a) {
      const double d = rows[r].values[a] - models[a * c + class_of[r]].mean;
      squares[a * c + class_of[r]] += d * d;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t k = 0; k < c; ++k) {
      const double var = squares[a * c + k] / static_cast<double>(counts[k] - 1);
      models[a * c + k].stddev = std::max(std::sqrt(var), kMinStddev);
    }
  }
  return AttributeModelSet(classes, n, std::move(models));
}

/// Mass function over the source's classes for one attribute value.
///
/// Singletons get their Gaussian memberships, the whole frame gets the
/// smallest membership, and the result is normalized. Memberships are floored
/// at kMembershipFloor so every output keeps some mass on the whole frame; if
/// all of them underflow the value says nothing and the result is vacuous.
inline MassFunction generate_bpa(const AttributeModelSet& models, std::size_t attribute, double value) {
  if (attribute >= models.attribute_count()) {
    throw ValidationError("attribute index " + std::to_string(attribute) + " out of range");
  }
  const auto& frame = models.classes();
  std::vector<double> membership(frame.size());
  double peak = 0.0;
  for (std::size_t k = 0; k < frame.size(); ++k) {
    membership[k] = models.at(attribute, k)(value);
    peak = std::max(peak, membership[k]);
  }
  if (!(peak >= kMembershipFloor)) return MassFunction::vacuous(frame);

  std::vector<Focal> focals;
  focals.reserve(frame.size() + 1);
  double total = 0.0;
  double lowest = 1.0;
  for (std::size_t k = 0; k < frame.size(); ++k) {
    const double f = std::max(membership[k], kMembershipFloor);
    focals.push_back({frame.singleton(k), f});
    total += f;
    lowest = std::min(lowest, f);
  }
  focals.push_back({frame.full_set(), lowest});
  total += lowest;
  for (auto& f : focals) f.mass /= total;
  return MassFunction::create(frame, std::move(focals));
}

}  // namespace fnbt

#endif  // FNBT_BPA_HPP
