#ifndef FNBT_BENCH_REPORT_HPP
#define FNBT_BENCH_REPORT_HPP

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fnbt/bench/evaluate.hpp"
#include "fnbt/bench/metrics.hpp"

namespace fnbt::bench {

/// Methods compared in the literature but not implemented here.
inline constexpr std::string_view kNotImplemented[] = {"etv-msif"};

inline nlohmann::json metrics_json(const std::string& dataset, Method method, Protocol protocol, std::uint64_t seed,
                                   const EvalMetrics& m) {
  nlohmann::json folds = nlohmann::json::array();
  for (std::size_t i = 0; i < m.folds.size(); ++i) {
    folds.push_back({{"fold", i},
                     {"n_test", m.folds[i].confusion.total()},
                     {"accuracy", 100.0 * m.folds[i].accuracy},
                     {"macro_f1", 100.0 * m.folds[i].macro_f1}});
  }
  return {{"dataset", dataset},
          {"method", std::string(to_string(method))},
          {"protocol", std::string(to_string(protocol))},
          {"seed", seed},
          {"accuracy_mean", m.accuracy_mean},
          {"accuracy_std", m.accuracy_std},
          {"macro_f1_mean", m.macro_f1_mean},
          {"macro_f1_std", m.macro_f1_std},
          {"folds", std::move(folds)}};
}

/// The EMPTY column is written for TBM and whenever a sample got no class.
inline bool wants_empty_column(Method method, const ConfusionMatrix& cm) {
  return method == Method::tbm || cm.empty_predictions() > 0;
}

/// Header: true class then predicted classes (plus EMPTY); one row per true class.
inline std::string confusion_csv(const ConfusionMatrix& cm, bool include_empty) {
  std::ostringstream os;
  os << "true";
  for (const auto& c : cm.classes) os << ',' << c;
  if (include_empty) os << ",EMPTY";
  os << '\n';
  for (std::size_t r = 0; r < cm.classes.size(); ++r) {
    os << cm.classes[r];
    for (std::size_t c = 0; c < cm.classes.size(); ++c) os << ',' << cm.counts[r][c];
    if (include_empty) os << ',' << cm.counts[r].back();
    os << '\n';
  }
  return os.str();
}

inline std::string format_percent(double mean, double std, bool with_std) {
  char buf[64];
  if (with_std) {
    std::snprintf(buf, sizeof buf, "%6.2f ± %5.2f", mean, std);
  } else {
    std::snprintf(buf, sizeof buf, "%6.2f%%", mean);
  }
  return buf;
}

/// Method rows with accuracy and macro-F1 columns.
inline std::string results_table(const std::string& dataset, Protocol protocol, std::span<const Method> methods,
                                 std::span<const EvalMetrics> results, bool list_missing = false) {
  const bool with_std = protocol == Protocol::cv10;
  std::ostringstream os;
  os << dataset << " (" << to_string(protocol) << ")\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-12s %-16s %-16s\n", "method", "accuracy", "macro-F1");
  os << line;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    const auto& m = results[i];
    std::snprintf(line, sizeof line, "%-12s %-16s %-16s\n", std::string(to_string(methods[i])).c_str(),
                  format_percent(m.accuracy_mean, m.accuracy_std, with_std).c_str(),
                  format_percent(m.macro_f1_mean, m.macro_f1_std, with_std).c_str());
    os << line;
  }
  if (list_missing) {
    for (auto name : kNotImplemented) {
      std::snprintf(line, sizeof line, "%-12s %s\n", std::string(name).c_str(), "not implemented");
      os << line;
    }
  }
  return os.str();
}

}  // namespace fnbt::bench

#endif  // FNBT_BENCH_REPORT_HPP
