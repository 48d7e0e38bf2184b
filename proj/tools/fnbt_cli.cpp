// fnbt: command-line front end for open-world evidence fusion and the
// classification benchmark.
//
// Exit codes: 0 success, 2 input or configuration error, 3 total conflict.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fnbt/bench/dataset.hpp"
#include "fnbt/bench/evaluate.hpp"
#include "fnbt/bench/report.hpp"
#include "fnbt/diagnostics.hpp"
#include "fnbt/fnbt.hpp"
#include "fnbt/json.hpp"

#ifndef FNBT_DATA_DIR
#define FNBT_DATA_DIR "data"
#endif

namespace {

namespace fs = std::filesystem;
using fnbt::MassFunction;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConflict = 3;

struct CliConfig {
  std::string subcommand;
  std::string input;
  std::string output;
  std::string rule = "fnbt";
  std::string decision;
  std::string dataset;
  std::string protocol;
  std::string methods;
  std::uint64_t seed = fnbt::bench::kDefaultSeed;
  std::string format = "text";
};

/// Input or configuration problem; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void echo_config(const CliConfig& c) {
  std::cerr << "# fnbt " << c.subcommand << ": seed=" << c.seed << " format=" << c.format;
  if (!c.input.empty()) std::cerr << " input=" << c.input;
  if (!c.output.empty()) std::cerr << " output=" << c.output;
  if (c.subcommand == "fuse" || c.subcommand == "zadeh") std::cerr << " rule=" << c.rule;
  if (!c.decision.empty()) std::cerr << " decision=" << c.decision;
  if (!c.dataset.empty()) std::cerr << " dataset=" << c.dataset;
  if (!c.protocol.empty()) std::cerr << " protocol=" << c.protocol;
  if (!c.methods.empty()) std::cerr << " methods=" << c.methods;
  std::cerr << '\n';
}

void require_format(const CliConfig& c, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed) {
    if (c.format == f) return;
  }
  throw UsageError("--format " + c.format + " is not supported by '" + c.subcommand + "'");
}

/// Writes to --output when given, stdout otherwise.
void emit(const CliConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + c.output);
  out << text;
}

std::vector<MassFunction> read_inputs(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(path + ": invalid JSON: " + e.what());
  }
  return fnbt::json::mass_list_from_json(j);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string format_names(const std::vector<std::string>& names) {
  if (names.empty()) return "\xE2\x88\x85";
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

std::string mass_lines(const MassFunction& m, const std::string& indent) {
  std::ostringstream os;
  for (const auto& f : m.focal_elements()) os << indent << m.frame().format(f.set) << ": " << fmt(f.mass) << '\n';
  return os.str();
}

std::string support_lines(const MassFunction& m, const std::string& indent) {
  std::ostringstream os;
  for (const auto& row : fnbt::singleton_table(m)) {
    os << indent << row.name << ": Bel=" << fmt(row.bel) << " Pl=" << fmt(row.pl) << '\n';
  }
  return os.str();
}

std::string verdict_text(const fnbt::OpenWorldAssessment& a) {
  std::ostringstream os;
  os << (a.is_open_world() ? "open world" : "closed world") << ", \xCE\xA5=" << format_names(a.upsilon_names()) << '\n';
  for (const auto& w : a.witnesses) {
    os << "  witness for " << a.universe.name(w.element) << ": focal " << a.universe.format(w.focal) << " of source "
       << (w.source + 1) << " is disjoint from every focal element of the other source\n";
  }
  if (a.is_total_contradiction()) {
    os << "warning: total contradiction, every hypothesis is essentially conflicting; fusion is undefined\n";
  }
  return os.str();
}

struct RuleChoice {
  bool fnbt = true;
  fnbt::Rule rule = fnbt::Rule::dempster;
};

/// "fnbt", "fnbt:<backend>", or a plain combination rule.
RuleChoice parse_rule_choice(const std::string& text) {
  if (text == "fnbt") return {};
  if (text.rfind("fnbt:", 0) == 0) {
    if (auto r = fnbt::parse_rule(text.substr(5))) return {true, *r};
  } else if (auto r = fnbt::parse_rule(text)) {
    return {false, *r};
  }
  throw UsageError("unknown rule '" + text + "'; valid: fnbt, fnbt:<rule>, dempster, yager, tbm, mgcr, murphy");
}

std::optional<fnbt::Strategy> parse_decision(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (auto s = fnbt::parse_strategy(text)) return s;
  throw UsageError("unknown decision '" + text + "'; valid: mass, bel, pl");
}

void warn_if_open_world(const std::vector<MassFunction>& inputs, const RuleChoice& choice) {
  if (choice.fnbt) return;
  auto a = fnbt::essential_conflict_set(inputs);
  if (!a.is_open_world()) return;
  std::cerr << "warning: the open-world criterion is satisfied (\xCE\xA5=" << format_names(a.upsilon_names())
            << "); " << fnbt::to_string(choice.rule)
            << " treats the sources as sharing one closed frame and may rule out plausible hypotheses\n";
  if (inputs.size() == 2 && choice.rule == fnbt::Rule::dempster) {
    try {
      auto d = fnbt::diagnose_dempster(inputs[0], inputs[1]);
      if (!d.absolutized.empty()) {
        std::cerr << "warning: Dempster's rule makes " << format_names(d.absolutized)
                  << " completely implausible although a source supports it\n";
      }
    } catch (const fnbt::TotalConflict&) {
    }
  }
}

int cmd_fuse(const CliConfig& c) {
  require_format(c, {"json", "text"});
  auto inputs = read_inputs(c.input);
  if (inputs.size() < 2) throw UsageError("fuse needs at least two mass functions, got " + std::to_string(inputs.size()));
  const auto choice = parse_rule_choice(c.rule);
  const auto decision = parse_decision(c.decision);
  warn_if_open_world(inputs, choice);

  if (choice.fnbt) {
    auto report = fnbt::fnbt_fuse_many(inputs, choice.rule);
    if (c.format == "json") {
      auto j = fnbt::json::to_json(report);
      if (decision) j["decision"] = {{"strategy", fnbt::to_string(*decision)}, {"choice", fnbt::decide(report.fused, *decision, c.seed)}};
      emit(c, j.dump(2) + "\n");
      return kExitOk;
    }
    std::ostringstream os;
    os << "rule: fnbt (back-end " << fnbt::to_string(report.rule) << ")\n";
    os << "assessment: " << verdict_text(report.assessment);
    os << "omega: " << report.omega.describe() << '\n';
    os << "k before transform: " << fmt(report.k_raw) << '\n';
    os << "k after transform: " << fmt(report.k_transformed) << '\n';
    os << "fused mass function:\n" << mass_lines(report.fused, "  ");
    os << "singletons:\n" << support_lines(report.fused, "  ");
    if (decision) os << "decision (" << fnbt::to_string(*decision) << "): " << fnbt::decide(report.fused, *decision, c.seed) << '\n';
    emit(c, os.str());
    return kExitOk;
  }

  fnbt::Frame universe = inputs.front().frame();
  for (const auto& m : inputs) universe = fnbt::union_frame(universe, m.frame());
  std::vector<MassFunction> embedded;
  for (const auto& m : inputs) embedded.push_back(m.embed_into(universe));
  const double k = fnbt::conjunctive_conflict(embedded);
  auto fused = fnbt::combine_all(choice.rule, embedded);
  if (c.format == "json") {
    json j = {{"rule", std::string(fnbt::to_string(choice.rule))},
              {"k", k},
              {"fused", fnbt::json::to_json(fused)},
              {"singletons", fnbt::json::to_json(fnbt::singleton_table(fused))}};
    if (decision) j["decision"] = {{"strategy", fnbt::to_string(*decision)}, {"choice", fnbt::decide(fused, *decision, c.seed)}};
    emit(c, j.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "rule: " << fnbt::to_string(choice.rule) << '\n';
  os << "k: " << fmt(k) << '\n';
  os << "fused mass function:\n" << mass_lines(fused, "  ");
  os << "singletons:\n" << support_lines(fused, "  ");
  if (decision) os << "decision (" << fnbt::to_string(*decision) << "): " << fnbt::decide(fused, *decision, c.seed) << '\n';
  emit(c, os.str());
  return kExitOk;
}

int cmd_check(const CliConfig& c) {
  require_format(c, {"json", "text"});
  auto inputs = read_inputs(c.input);
  if (inputs.size() != 2) throw UsageError("check needs exactly two mass functions, got " + std::to_string(inputs.size()));
  auto a = fnbt::essential_conflict_set(inputs);
  if (c.format == "json") {
    emit(c, fnbt::json::to_json(a).dump(2) + "\n");
  } else {
    emit(c, verdict_text(a));
  }
  return kExitOk;
}

int cmd_zadeh(const CliConfig& c) {
  require_format(c, {"json", "text"});
  const fnbt::Frame theta{"a", "b", "c"};
  const auto m1 = MassFunction::from_names(theta, {{{"a"}, 0.9}, {{"b"}, 0.1}});
  const auto m2 = MassFunction::from_names(theta, {{{"b"}, 0.1}, {{"c"}, 0.9}});
  const auto choice = parse_rule_choice(c.rule);

  if (!choice.fnbt) {
    auto fused = fnbt::combine(choice.rule, m1, m2);
    if (c.format == "json") {
      emit(c, json{{"rule", std::string(fnbt::to_string(choice.rule))},
                   {"k", fnbt::conflict(m1, m2).k},
                   {"fused", fnbt::json::to_json(fused)}}
                      .dump(2) +
                  "\n");
      return kExitOk;
    }
    std::ostringstream os;
    os << "Zadeh's example under " << fnbt::to_string(choice.rule) << "'s rule on {a,b,c}\n";
    os << "  m1: " << m1.to_string() << "\n  m2: " << m2.to_string() << '\n';
    os << "  k = " << fmt(fnbt::conflict(m1, m2).k) << '\n';
    os << "  fused:\n" << mass_lines(fused, "    ");
    os << "  b, weakly supported by both sources, ends up with all of the belief.\n";
    emit(c, os.str());
    return kExitOk;
  }

  auto report = fnbt::fnbt_fuse(m1, m2, choice.rule);
  if (c.format == "json") {
    emit(c, fnbt::json::to_json(report).dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "Zadeh's example: m1({a})=0.9, m1({b})=0.1; m2({b})=0.1, m2({c})=0.9 on {a,b,c}\n\n";
  os << "Step 1: open-world criterion\n  " << verdict_text(report.assessment) << '\n';
  os << "Step 2: frame extension\n";
  os << "  effective frame of m1: " << m1.frame().format(m1.effective_frame()) << '\n';
  os << "  effective frame of m2: " << m2.frame().format(m2.effective_frame()) << '\n';
  os << "  omega: " << report.omega.describe() << "\n\n";
  os << "Step 3: full negation transform\n";
  for (std::size_t i = 0; i < report.transformed_inputs.size(); ++i) {
    os << "  m" << (i + 1) << "':\n" << mass_lines(report.transformed_inputs[i], "    ");
  }
  os << "\nStep 4: combination (" << fnbt::to_string(report.rule) << ")\n";
  os << "  k before transform: " << fmt(report.k_raw) << ", after: " << fmt(report.k_transformed) << '\n';
  os << mass_lines(report.fused, "  ");
  os << "  singletons:\n" << support_lines(report.fused, "    ");
  emit(c, os.str());
  return kExitOk;
}

fnbt::bench::Dataset resolve_dataset(const std::string& arg) {
  if (arg.empty()) throw UsageError("--dataset is required");
  fs::path path(arg);
  if (!fs::exists(path)) path = fs::path(FNBT_DATA_DIR) / (arg + ".csv");
  if (!fs::exists(path)) {
    throw UsageError("dataset '" + arg + "' not found (looked for a file and for " + path.string() + ")");
  }
  return fnbt::bench::load_csv(path);
}

std::vector<fnbt::bench::Method> parse_methods(const std::string& list) {
  std::vector<fnbt::bench::Method> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto m = fnbt::bench::parse_method(item);
    if (!m) {
      std::string valid;
      for (auto v : fnbt::bench::kAllMethods) valid += (valid.empty() ? "" : ", ") + std::string(fnbt::bench::to_string(v));
      throw UsageError("unknown method '" + item + "'; valid methods: " + valid);
    }
    out.push_back(*m);
  }
  if (out.empty()) throw UsageError("no methods given");
  return out;
}

int run_benchmark(const CliConfig& c, const std::string& default_methods, const std::string& default_protocol,
                  bool list_missing) {
  require_format(c, {"json", "csv", "text"});
  const auto methods = parse_methods(c.methods.empty() ? default_methods : c.methods);
  const auto protocol_name = c.protocol.empty() ? default_protocol : c.protocol;
  const auto protocol = fnbt::bench::parse_protocol(protocol_name);
  if (!protocol) throw UsageError("unknown protocol '" + protocol_name + "'; valid: cv10, holdout20");
  const auto ds = resolve_dataset(c.dataset);

  fnbt::bench::EvalConfig cfg;
  cfg.seed = c.seed;
  const auto results = fnbt::bench::run_protocol(ds, *protocol, methods, cfg);

  const fs::path out_dir = c.output.empty() ? fs::path("results") : fs::path(c.output);
  fs::create_directories(out_dir);
  json all = json::array();
  std::string csvs;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    const auto stem = ds.name + "_" + std::string(fnbt::bench::to_string(*protocol)) + "_" +
                      std::string(fnbt::bench::to_string(methods[i]));
    auto j = fnbt::bench::metrics_json(ds.name, methods[i], *protocol, c.seed, results[i]);
    auto csv = fnbt::bench::confusion_csv(results[i].confusion,
                                          fnbt::bench::wants_empty_column(methods[i], results[i].confusion));
    std::ofstream(out_dir / (stem + "_metrics.json"), std::ios::binary) << j.dump(2) << '\n';
    std::ofstream(out_dir / (stem + "_confusion.csv"), std::ios::binary) << csv;
    all.push_back(std::move(j));
    csvs += "# " + stem + "\n" + csv;
  }
  if (c.format == "json") {
    std::cout << all.dump(2) << '\n';
  } else if (c.format == "csv") {
    std::cout << csvs;
  } else {
    std::cout << fnbt::bench::results_table(ds.name, *protocol, methods, results, list_missing);
    std::cout << "artifacts written to " << out_dir.string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open-world evidence fusion (full negation belief transformation) and benchmark harness"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format: json | csv | text")->capture_default_str();
    sub->add_option("--output", cfg.output, "Output file (fuse/check/zadeh) or directory (classify/compare)");
  };

  auto* fuse = app.add_subcommand("fuse", "Fuse two or more mass functions from a JSON file");
  fuse->add_option("--input", cfg.input, "JSON file with mass functions")->required();
  fuse->add_option("--rule", cfg.rule, "fnbt, fnbt:<rule>, dempster, yager, tbm, mgcr, murphy")->capture_default_str();
  fuse->add_option("--decision", cfg.decision, "Also report a decision: mass | bel | pl");
  add_common(fuse);

  auto* check = app.add_subcommand("check", "Evaluate the open-world criterion for two mass functions");
  check->add_option("--input", cfg.input, "JSON file with two mass functions")->required();
  add_common(check);

  auto* zadeh = app.add_subcommand("zadeh", "Walk through Zadeh's example step by step");
  zadeh->add_option("--rule", cfg.rule, "fnbt, fnbt:<rule>, or a plain rule for contrast")->capture_default_str();
  add_common(zadeh);

  std::string single_method;
  auto* classify = app.add_subcommand("classify", "Evaluate methods on a dataset (default: fnbt-pl, cv10)");
  classify->add_option("--dataset", cfg.dataset, "iris | wine | seeds | path to CSV")->required();
  classify->add_option("--method,--methods", cfg.methods, "Comma-separated methods");
  classify->add_option("--protocol", cfg.protocol, "cv10 | holdout20");
  add_common(classify);

  auto* compare = app.add_subcommand("compare", "Compare fusion methods on one split (default: holdout20)");
  compare->add_option("--dataset", cfg.dataset, "iris | wine | seeds | path to CSV")->required();
  compare->add_option("--methods", cfg.methods, "Comma-separated methods");
  compare->add_option("--protocol", cfg.protocol, "cv10 | holdout20");
  add_common(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  echo_config(cfg);

  try {
    if (cfg.subcommand == "fuse") return cmd_fuse(cfg);
    if (cfg.subcommand == "check") return cmd_check(cfg);
    if (cfg.subcommand == "zadeh") return cmd_zadeh(cfg);
    if (cfg.subcommand == "classify") return run_benchmark(cfg, "fnbt-pl", "cv10", false);
    return run_benchmark(cfg, "dempster,yager,tbm,mgcr,murphy,fnbt-pl", "holdout20", true);
  } catch (const fnbt::TotalConflict& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConflict;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const fnbt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
