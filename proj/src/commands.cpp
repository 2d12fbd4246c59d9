#include "dsl/commands.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "dsl/config.hpp"
#include "dsl/errors.hpp"
#include "dsl/integral_test.hpp"
#include "dsl/lil_stats.hpp"
#include "dsl/report.hpp"
#include "dsl/validation.hpp"

namespace dsl {

using nlohmann::json;

std::vector<ReplicationResult> simulate(const ExperimentConfig& config, int threads) {
  auto results = replicate(config, threads);
  const Scheme scheme(config.regime);
  const Regime regime = classify_regime(config.regime);
  for (auto& r : results) annotate(r.records, regime, scheme);
  return results;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::optional<ExperimentConfig> load_or_report(const std::filesystem::path& path,
                                               std::ostream& err) {
  try {
    auto config = load_config(path);
    apply_seed_override(config);
    return config;
  } catch (const ConfigError& e) {
    err << "invalid config: " << e.what() << '\n';
    return std::nullopt;
  }
}

}  // namespace

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  const auto config = load_or_report(options.config, err);
  if (!config) return exit_code::kInvalid;
  try {
    const auto results = simulate(*config, options.threads);
    std::filesystem::create_directories(options.out_dir);
    const OutputPaths paths = output_paths(options.out_dir);

    std::ostringstream csv;
    write_records_csv(csv, results);
    write_file(paths.records, csv.str());
    const json summary = summary_json(*config, results);
    write_file(paths.summary, summary.dump(2) + "\n");
    write_file(paths.manifest, manifest_json(*config, paths).dump(2) + "\n");

    if (!options.quiet) {
      const auto& head = summary["statistics"][summary["statistic"].get<std::string>()];
      out << "wrote " << paths.records.string() << '\n'
          << "branch " << summary["branch"].get<std::string>() << ", predicted "
          << summary["predicted_limit"].dump() << ", pooled max " << head["pooled"]["max"].dump()
          << '\n';
    }
    return exit_code::kOk;
  } catch (const NumericAbort& e) {
    err << "numeric abort: " << e.what() << '\n';
    return exit_code::kNumericAbort;
  } catch (const ConfigError& e) {
    err << "invalid config: " << e.what() << '\n';
    return exit_code::kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kFailed;
  }
}

int cmd_limits(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  const auto config = load_or_report(path, err);
  if (!config) return exit_code::kInvalid;
  out << limits_json(*config).dump(2) << '\n';
  return exit_code::kOk;
}

int cmd_classify(std::string_view fn_spec, int K, int window, std::ostream& out,
                 std::ostream& err) {
  try {
    const TestFn fn = parse_test_fn(fn_spec);
    const Classification numeric = classify_numeric(fn, K, window);
    json sums = json::array();
    for (const auto& [k, s] : numeric.partial_sums) sums.push_back({k, s});
    json doc = {{"fn", fn.describe()},
                {"method", fn.analytic() ? "analytic" : "numeric"},
                {"numeric",
                 {{"verdict", to_string(numeric.verdict)},
                  {"tail_slope", numeric.tail_slope},
                  {"K", numeric.K},
                  {"window", numeric.window},
                  {"partial_sums", sums}}}};
    doc["verdict"] = to_string(fn.analytic() ? classify_analytic(fn).verdict : numeric.verdict);
    out << doc.dump() << '\n';
    return exit_code::kOk;
  } catch (const std::invalid_argument& e) {
    err << "invalid function spec: " << e.what() << '\n';
    return exit_code::kInvalid;
  }
}

int cmd_scheme(const std::filesystem::path& path, std::int64_t n_max, double ratio,
               std::ostream& out, std::ostream& err) {
  const auto config = load_or_report(path, err);
  if (!config) return exit_code::kInvalid;
  try {
    const Scheme scheme(config->regime);
    const auto grid = checkpoint_grid(n_max > 0 ? n_max : config->n_max, ratio);
    out << "n,tau1,tau2,regime_ratio\n";
    for (const auto n : grid) {
      out << n << ',' << scheme.tau1(n) << ',' << scheme.tau2(n) << ',';
      if (scheme.tau2(n) > 0) out << format_double(scheme.regime_ratio(n));
      out << '\n';
    }
    return exit_code::kOk;
  } catch (const std::invalid_argument& e) {
    err << "invalid scheme request: " << e.what() << '\n';
    return exit_code::kInvalid;
  }
}

LawChoice parse_law_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("law spec must look like 'stable:alpha=1,scale=1'");
  }
  const std::string_view kind = text.substr(0, colon);
  json params = json::object();
  params["kind"] = std::string(kind);
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("expected key=value, got '" + std::string(item) + "'");
    }
    double value = 0.0;
    const std::string_view raw = item.substr(eq + 1);
    const auto [end, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc() || end != raw.data() + raw.size()) {
      throw std::invalid_argument("not a number: '" + std::string(raw) + "'");
    }
    params[std::string(item.substr(0, eq))] = value;
  }
  // Asymmetric Pareto laws are fine here (the config reader rejects them),
  // so check their keys directly.
  if (kind == "pareto") {
    for (const char* k : {"alpha", "c_plus", "c_minus", "cutoff"}) {
      if (!params.contains(k)) throw std::invalid_argument(std::string("missing ") + k);
    }
    for (const auto& item : params.items()) {
      if (item.key() != "kind" && item.key() != "alpha" && item.key() != "c_plus" &&
          item.key() != "c_minus" && item.key() != "cutoff") {
        throw std::invalid_argument("unknown key '" + item.key() + "'");
      }
    }
    return ParetoTailSpec(params["alpha"], params["c_plus"], params["c_minus"], params["cutoff"]);
  }
  // Other kinds go through the strict config reader for key checking.
  json doc = {{"law1", params},
              {"law2", params},
              {"regime", {{"kind", "stable_alpha2"}, {"alpha1", 1.0}, {"alpha2", 1.0}, {"mu", 1.0}}},
              {"lag", {{"kind", "full"}}},
              {"n_max", 16},
              {"summand_seed", 0},
              {"lag_seed", 0}};
  const double alpha = params.contains("alpha") && params["alpha"].is_number()
                           ? params["alpha"].get<double>()
                           : 1.0;
  doc["regime"]["alpha1"] = alpha;
  doc["regime"]["alpha2"] = alpha;
  try {
    return config_from_json(doc).law1;
  } catch (const ConfigError& e) {
    throw std::invalid_argument(e.what());
  }
}

int cmd_validate(std::string_view law_spec, std::int64_t draws, std::uint64_t seed,
                 std::ostream& out, std::ostream& err) {
  LawChoice law = ZeroLaw{1.0};
  try {
    law = parse_law_spec(law_spec);
    if (draws < 1000) throw std::invalid_argument("need at least 1000 draws");
  } catch (const std::invalid_argument& e) {
    err << "invalid law spec: " << e.what() << '\n';
    return exit_code::kInvalid;
  }
  const auto checks = run_validation_suite(law, draws, seed);
  bool ok = true;
  for (const auto& c : checks) {
    ok = ok && c.pass;
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " observed=" << format_double(c.observed)
        << " expected=" << format_double(c.expected) << " tol=" << format_double(c.tolerance)
        << '\n';
  }
  return ok ? exit_code::kOk : exit_code::kFailed;
}

}  // namespace dsl
