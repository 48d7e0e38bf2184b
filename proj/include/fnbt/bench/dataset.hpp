#ifndef FNBT_BENCH_DATASET_HPP
#define FNBT_BENCH_DATASET_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "fnbt/bpa.hpp"
#include "fnbt/errors.hpp"
#include "fnbt/frame.hpp"

namespace fnbt::bench {

/// Labeled numeric table; class names keep their first-appearance order.
struct Dataset {
  std::string name;
  std::vector<std::string> attribute_names;
  std::vector<LabeledRow> rows;
  std::vector<std::string> class_names;

  std::size_t attribute_count() const { return attribute_names.size(); }
  Frame class_frame() const { return Frame(class_names); }

  std::vector<std::size_t> class_counts() const {
    std::vector<std::size_t> counts(class_names.size(), 0);
    for (const auto& r : rows) {
      auto it = std::find(class_names.begin(), class_names.end(), r.label);
      ++counts[static_cast<std::size_t>(it - class_names.begin())];
    }
    return counts;
  }

  /// Class counts differ; such datasets get SMOTE inside each training portion.
  bool is_imbalanced() const {
    auto counts = class_counts();
    return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) != counts.end();
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    cells.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

}  // namespace detail

/// Header row, numeric attribute columns, label in the last column.
/// Errors carry the 1-based line and column of the offending cell.
inline Dataset parse_csv(std::istream& in, std::string name) {
  Dataset ds;
  ds.name = std::move(name);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = detail::trim(line);
    if (view.empty()) continue;
    if (!have_header && view.substr(0, 3) == "\xEF\xBB\xBF") view.remove_prefix(3);
    auto cells = detail::split_commas(view);
    if (!have_header) {
      if (cells.size() < 2) throw DataError("line " + std::to_string(line_no) + ": header needs attributes and a label");
      for (std::size_t c = 0; c + 1 < cells.size(); ++c) ds.attribute_names.emplace_back(cells[c]);
      have_header = true;
      continue;
    }
    if (cells.size() != ds.attribute_names.size() + 1) {
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(ds.attribute_names.size() + 1) + " columns, found " +
                      std::to_string(cells.size()));
    }
    LabeledRow row;
    row.values.reserve(ds.attribute_names.size());
    for (std::size_t c = 0; c + 1 < cells.size(); ++c) {
      double v = 0.0;
      const auto cell = cells[c];
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
        throw DataError("line " + std::to_string(line_no) + ", column " + std::to_string(c + 1) + ": '" +
                        std::string(cell) + "' is not a number");
      }
      row.values.push_back(v);
    }
    row.label = std::string(cells.back());
    if (row.label.empty()) {
      throw DataError("line " + std::to_string(line_no) + ", column " + std::to_string(cells.size()) +
                      ": empty label");
    }
    if (std::find(ds.class_names.begin(), ds.class_names.end(), row.label) == ds.class_names.end()) {
      ds.class_names.push_back(row.label);
    }
    ds.rows.push_back(std::move(row));
  }
  if (!have_header) throw DataError("empty CSV: no header row");
  if (ds.rows.empty()) throw DataError("CSV has a header but no data rows");
  return ds;
}

/// Dataset named after the file stem ("data/iris.csv" -> "iris").
inline Dataset load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset " + path.string());
  try {
    return parse_csv(in, path.stem().string());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

}  // namespace fnbt::bench

#endif  // FNBT_BENCH_DATASET_HPP
