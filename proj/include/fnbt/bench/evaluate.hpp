#ifndef FNBT_BENCH_EVALUATE_HPP
#define FNBT_BENCH_EVALUATE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fnbt/bench/dataset.hpp"
#include "fnbt/bench/metrics.hpp"
#include "fnbt/bench/protocol.hpp"
#include "fnbt/bpa.hpp"
#include "fnbt/combination.hpp"
#include "fnbt/decision.hpp"
#include "fnbt/fusion.hpp"

namespace fnbt::bench {

/// Cross-source fusion method under evaluation.
enum class Method { dempster, yager, tbm, mgcr, murphy, fnbt_mass, fnbt_bel, fnbt_pl };

inline constexpr Method kAllMethods[] = {Method::dempster, Method::yager,     Method::tbm,      Method::mgcr,
                                         Method::murphy,   Method::fnbt_mass, Method::fnbt_bel, Method::fnbt_pl};

inline constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::dempster: return "dempster";
    case Method::yager: return "yager";
    case Method::tbm: return "tbm";
    case Method::mgcr: return "mgcr";
    case Method::murphy: return "murphy";
    case Method::fnbt_mass: return "fnbt-mass";
    case Method::fnbt_bel: return "fnbt-bel";
    case Method::fnbt_pl: return "fnbt-pl";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

inline bool is_fnbt(Method m) { return m == Method::fnbt_mass || m == Method::fnbt_bel || m == Method::fnbt_pl; }

enum class Protocol { cv10, holdout20 };

inline constexpr std::string_view to_string(Protocol p) { return p == Protocol::cv10 ? "cv10" : "holdout20"; }

inline std::optional<Protocol> parse_protocol(std::string_view name) {
  if (name == "cv10") return Protocol::cv10;
  if (name == "holdout20") return Protocol::holdout20;
  return std::nullopt;
}

struct EvalConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t folds = 10;
  double test_fraction = 0.2;
  std::size_t smote_k = 5;
  /// Unset: SMOTE runs exactly when the dataset's class counts differ.
  std::optional<bool> smote;
  /// Rule folding the per-attribute evidence inside one source.
  Rule intra_rule = Rule::dempster;
};

/// No label means the method committed to no class (empty set or total conflict).
struct Prediction {
  std::optional<std::string> label;
  bool total_conflict = false;
};

/// Evidence of one source about one sample: the per-attribute BPAs folded by `intra`.
inline MassFunction source_evidence(const AttributeModelSet& models, std::span<const double> sample,
                                    Rule intra = Rule::dempster) {
  if (sample.size() != models.attribute_count()) throw DataError("sample has the wrong number of attributes");
  std::vector<MassFunction> pieces;
  pieces.reserve(sample.size());
  for (std::size_t a = 0; a < sample.size(); ++a) pieces.push_back(generate_bpa(models, a, sample[a]));
  return combine_all(intra, pieces);
}

/// Decision for the closed-world baselines: the singleton with the largest
/// mass. The empty set competes when it carries mass and wins only strictly.
/// Without any singleton mass the heaviest focal element decides, a
/// multi-element one through a seeded random member.
inline std::optional<std::string> decide_baseline(const MassFunction& m, std::uint64_t seed) {
  const auto& frame = m.frame();
  std::optional<std::size_t> best;
  double best_mass = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const double v = m.mass(frame.singleton(i));
    if (v > best_mass) {
      best = i;
      best_mass = v;
    }
  }
  const double empty_mass = m.mass(frame.empty_set());
  if (empty_mass > best_mass) return std::nullopt;
  if (best) return frame.name(*best);
  if (!max_mass_focal(m)) return std::nullopt;
  return decide(m, Strategy::mass, seed);
}

/// Cross-source fusion of two source-level mass functions plus the decision.
inline Prediction classify_evidence(const MassFunction& m_a, const MassFunction& m_b, Method method,
                                    std::uint64_t seed) {
  try {
    if (is_fnbt(method)) {
      auto report = fnbt_fuse(m_a, m_b, Rule::dempster);
      const auto strategy = method == Method::fnbt_mass ? Strategy::mass
                            : method == Method::fnbt_bel ? Strategy::bel
                                                         : Strategy::pl;
      return {decide(report.fused, strategy, seed), false};
    }
    auto [a, b] = align(m_a, m_b);
    MassFunction fused = [&] {
      switch (method) {
        case Method::dempster: return dempster(a, b);
        case Method::yager: return yager(a, b);
        case Method::tbm: return tbm_conjunctive(a, b);
        case Method::mgcr: return mgcr(a, b);
        default: {
          const MassFunction pair[] = {a, b};
          return murphy_average(pair);
        }
      }
    }();
    return {decide_baseline(fused, seed), false};
  } catch (const TotalConflict&) {
    return {std::nullopt, true};
  }
}

inline Prediction classify_sample(std::span<const double> sample, const AttributeModelSet& models_a,
                                  const AttributeModelSet& models_b, Method method, std::uint64_t seed,
                                  Rule intra = Rule::dempster) {
  try {
    return classify_evidence(source_evidence(models_a, sample, intra), source_evidence(models_b, sample, intra),
                             method, seed);
  } catch (const TotalConflict&) {
    return {std::nullopt, true};
  }
}

namespace detail {

/// Predictions of every method for `test`, using models trained on `train`.
/// `partition` tags the RNG streams (fold number, or 0 for holdout);
/// `test_ids` are dataset row indices used to derive per-sample seeds.
inline std::vector<std::vector<std::optional<std::string>>> predict_partition(
    const Dataset& ds, std::vector<LabeledRow> train, std::span<const std::size_t> test_ids,
    std::span<const Method> methods, const EvalConfig& cfg, std::uint64_t partition) {
  if (cfg.smote.value_or(ds.is_imbalanced())) {
    train = smote_balance(train, ds.class_names, cfg.smote_k, derive_seed(cfg.seed, Stream::smote, {partition}));
  }
  auto split = make_heterogeneous_split(train, ds.class_names, derive_seed(cfg.seed, Stream::split, {partition}));
  const auto models_a = fit_attribute_models(split.source_a, split.frame_a);
  const auto models_b = fit_attribute_models(split.source_b, split.frame_b);

  std::vector<std::vector<std::optional<std::string>>> out(methods.size());
  for (auto id : test_ids) {
    const auto& sample = ds.rows[id].values;
    const auto seed = derive_seed(cfg.seed, Stream::sample, {partition, id});
    std::optional<MassFunction> m_a;
    std::optional<MassFunction> m_b;
    try {
      m_a = source_evidence(models_a, sample, cfg.intra_rule);
      m_b = source_evidence(models_b, sample, cfg.intra_rule);
    } catch (const TotalConflict&) {
    }
    for (std::size_t k = 0; k < methods.size(); ++k) {
      out[k].push_back(m_a && m_b ? classify_evidence(*m_a, *m_b, methods[k], seed).label : std::nullopt);
    }
  }
  return out;
}

inline void require_protocol_dataset(const Dataset& ds) {
  if (ds.class_names.size() != 3) {
    throw DataError("dataset '" + ds.name + "' has " + std::to_string(ds.class_names.size()) +
                    " classes; the heterogeneous protocol needs exactly 3");
  }
}

}  // namespace detail

/// Stratified k-fold cross-validation of several methods on identical folds.
inline std::vector<EvalMetrics> run_cv(const Dataset& ds, std::span<const Method> methods, const EvalConfig& cfg = {}) {
  detail::require_protocol_dataset(ds);
  const auto fold_of = stratified_folds(ds, cfg.folds, cfg.seed);
  std::vector<std::vector<FoldMetrics>> per_method(methods.size());
  for (std::size_t fold = 0; fold < cfg.folds; ++fold) {
    std::vector<LabeledRow> train;
    std::vector<std::size_t> test_ids;
    std::vector<std::string> truth;
    for (std::size_t i = 0; i < ds.rows.size(); ++i) {
      if (fold_of[i] == fold) {
        test_ids.push_back(i);
        truth.push_back(ds.rows[i].label);
      } else {
        train.push_back(ds.rows[i]);
      }
    }
    auto predictions = detail::predict_partition(ds, std::move(train), test_ids, methods, cfg, fold);
    for (std::size_t k = 0; k < methods.size(); ++k) {
      per_method[k].push_back(metrics(truth, predictions[k], ds.class_names));
    }
  }
  std::vector<EvalMetrics> out;
  out.reserve(methods.size());
  for (auto& folds : per_method) out.push_back(aggregate(std::move(folds)));
  return out;
}

inline EvalMetrics run_cv(const Dataset& ds, Method method, const EvalConfig& cfg = {}) {
  const Method one[] = {method};
  return run_cv(ds, one, cfg).front();
}

/// Stratified holdout; every method sees the same split, models and sample seeds.
inline std::vector<EvalMetrics> run_holdout(const Dataset& ds, std::span<const Method> methods,
                                            const EvalConfig& cfg = {}) {
  detail::require_protocol_dataset(ds);
  const auto is_test = stratified_holdout(ds, cfg.test_fraction, cfg.seed);
  std::vector<LabeledRow> train;
  std::vector<std::size_t> test_ids;
  std::vector<std::string> truth;
  for (std::size_t i = 0; i < ds.rows.size(); ++i) {
    if (is_test[i]) {
      test_ids.push_back(i);
      truth.push_back(ds.rows[i].label);
    } else {
      train.push_back(ds.rows[i]);
    }
  }
  auto predictions = detail::predict_partition(ds, std::move(train), test_ids, methods, cfg, 0);
  std::vector<EvalMetrics> out;
  out.reserve(methods.size());
  for (std::size_t k = 0; k < methods.size(); ++k) {
    out.push_back(aggregate({metrics(truth, predictions[k], ds.class_names)}));
  }
  return out;
}

inline std::vector<EvalMetrics> run_protocol(const Dataset& ds, Protocol protocol, std::span<const Method> methods,
                                             const EvalConfig& cfg = {}) {
  return protocol == Protocol::cv10 ? run_cv(ds, methods, cfg) : run_holdout(ds, methods, cfg);
}

}  // namespace fnbt::bench

#endif  // FNBT_BENCH_EVALUATE_HPP
