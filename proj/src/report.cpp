#include "dsl/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dsl/config.hpp"
#include "dsl/random.hpp"

namespace dsl {

using nlohmann::json;

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

namespace {

void put(std::ostream& out, const std::optional<double>& v) {
  out << ',';
  if (v) out << format_double(*v);
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<double> log_ratio(const std::optional<double>& observed,
                                const std::optional<double>& predicted) {
  if (!observed || !predicted || !(*observed > 0.0) || !(*predicted > 0.0)) return std::nullopt;
  return std::log(*observed / *predicted);
}

std::optional<double> median(std::vector<double> v) {
  if (v.empty()) return std::nullopt;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

const char* column(ChoverExponent which) {
  switch (which) {
    case ChoverExponent::LogLog:
      return "chover_loglog";
    case ChoverExponent::Gamma:
      return "chover_gamma";
    case ChoverExponent::GammaStar:
      return "chover_gamma_star";
  }
  return "?";
}

std::optional<double> final_runmax(const ReplicationResult& r, ChoverExponent which) {
  if (r.records.empty()) return std::nullopt;
  const auto& last = r.records.back();
  switch (which) {
    case ChoverExponent::LogLog:
      return last.runmax_loglog;
    case ChoverExponent::Gamma:
      return last.runmax_gamma;
    case ChoverExponent::GammaStar:
      return last.runmax_gamma_star;
  }
  return std::nullopt;
}

json lag_regime_json(const std::optional<LagRegime>& lr) {
  if (!lr) return nullptr;
  switch (lr->kind) {
    case LagRegime::Kind::Zero:
      return {{"kind", "zero"}, {"s", 0.0}};
    case LagRegime::Kind::Finite:
      return {{"kind", "finite"}, {"s", lr->s}};
    case LagRegime::Kind::Infinite:
      return {{"kind", "infinite"}, {"s", nullptr}};
  }
  return nullptr;
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const ReplicationResult> results) {
  out << kRecordsHeader << '\n';
  for (const auto& rep : results) {
    for (const auto& r : rep.records) {
      out << r.rep << ',' << r.n << ',' << r.tau1 << ',' << r.tau2 << ',' << format_double(r.S)
          << ',' << format_double(r.U) << ',' << format_double(r.V) << ',' << r.a_n;
      put(out, r.T);
      put(out, r.B_n);
      put(out, r.B_an);
      put(out, r.s_n);
      put(out, r.gamma_n);
      put(out, r.gamma_star);
      put(out, r.chover_loglog);
      put(out, r.chover_gamma);
      put(out, r.chover_gamma_star);
      put(out, r.runmax_loglog);
      put(out, r.runmax_gamma);
      put(out, r.runmax_gamma_star);
      out << '\n';
    }
  }
}

ChoverExponent headline_statistic(const Regime& regime) {
  if (!regime.collapsed() && regime.kind == LimitKind::StableAlpha1) {
    return ChoverExponent::GammaStar;
  }
  return ChoverExponent::Gamma;
}

json limits_json(const ExperimentConfig& config) {
  const Regime regime = classify_regime(config.regime);
  const auto lr = lag_regime(config.lag);
  const ChoverExponent head = headline_statistic(regime);
  json predictions = json::object();
  for (const auto which :
       {ChoverExponent::LogLog, ChoverExponent::Gamma, ChoverExponent::GammaStar}) {
    predictions[column(which)] = optional_number(predicted_for(regime, which, lr));
  }
  return {{"regime", regime.name()},
          {"alpha1", regime.alpha1},
          {"alpha2", regime.alpha2},
          {"normalizer", normalizer_formula(regime)},
          {"lag", lag_to_json(config.lag)},
          {"lag_regime", lag_regime_json(lr)},
          {"branch", branch_name(regime, lr)},
          {"statistic", column(head)},
          {"predicted_limit", optional_number(predicted_for(regime, head, lr))},
          {"predicted", predictions}};
}

json summary_json(const ExperimentConfig& config, std::span<const ReplicationResult> results) {
  json doc = limits_json(config);
  const Regime regime = classify_regime(config.regime);
  const auto lr = lag_regime(config.lag);
  json stats = json::object();
  for (const auto which :
       {ChoverExponent::LogLog, ChoverExponent::Gamma, ChoverExponent::GammaStar}) {
    const auto predicted = predicted_for(regime, which, lr);
    json per_rep = json::array();
    std::vector<double> finals;
    for (const auto& r : results) {
      const auto fin = final_runmax(r, which);
      if (fin) finals.push_back(*fin);
      per_rep.push_back({{"rep", r.rep},
                         {"final_runmax", optional_number(fin)},
                         {"log_ratio", optional_number(log_ratio(fin, predicted))}});
    }
    std::optional<double> pooled_max;
    if (!finals.empty()) pooled_max = *std::max_element(finals.begin(), finals.end());
    const auto pooled_median = median(finals);
    stats[column(which)] = {
        {"predicted", optional_number(predicted)},
        {"pooled",
         {{"max", optional_number(pooled_max)},
          {"log_ratio_max", optional_number(log_ratio(pooled_max, predicted))},
          {"median", optional_number(pooled_median)},
          {"log_ratio_median", optional_number(log_ratio(pooled_median, predicted))}}},
        {"per_replication", per_rep}};
  }
  doc["statistics"] = stats;

  // Empirical B(n + a_n) / B(n) at each replication's last checkpoint.
  const Scheme scheme(config.regime);
  json ratio_reps = json::array();
  std::vector<double> ratios;
  for (const auto& r : results) {
    std::optional<double> ratio;
    if (!r.records.empty()) {
      const auto& last = r.records.back();
      try {
        ratio = normalizer(regime, scheme, last.n + last.a_n) / normalizer(regime, scheme, last.n);
        ratios.push_back(*ratio);
      } catch (const std::domain_error&) {
      }
    }
    ratio_reps.push_back({{"rep", r.rep}, {"ratio", optional_number(ratio)}});
  }
  doc["normalizer_window_ratio"] = {{"median", optional_number(median(ratios))},
                                    {"per_replication", ratio_reps}};
  doc["n_max"] = config.n_max;
  doc["checkpoint_ratio"] = config.checkpoint_ratio;
  doc["replications"] = config.replications;
  doc["note"] =
      "running maxima over a finite checkpoint grid are proxies for almost-sure limsups";
  return doc;
}

OutputPaths output_paths(const std::filesystem::path& dir) {
  return {dir / "records.csv", dir / "summary.json", dir / "manifest.json"};
}

json manifest_json(const ExperimentConfig& config, const OutputPaths& paths) {
  json seeds = json::array();
  for (int r = 0; r < config.replications; ++r) {
    const auto rep = static_cast<std::uint64_t>(r);
    seeds.push_back({{"rep", rep},
                     {"summand", derive_seed(config.summand_seed, rep, Stream::Summands)},
                     {"lag", derive_seed(config.lag_seed, rep, Stream::Lags)}});
  }
  return {{"artifact_version", kArtifactVersion},
          {"config", config_to_json(config)},
          {"seed_derivation",
           {{"generator", "mt19937_64"},
            {"rule",
             "seed(base, rep, stream) = splitmix64(splitmix64(base ^ tag) + (rep + 1) * "
             "0x9E3779B97F4A7C15); tag = 0 for summands, 0xD1B54A32D192ED03 for lags"},
            {"replications", seeds}}},
          {"checkpoint_grid", checkpoint_grid(config.n_max, config.checkpoint_ratio)},
          {"outputs",
           {{"records", paths.records.filename().string()},
            {"summary", paths.summary.filename().string()},
            {"manifest", paths.manifest.filename().string()}}}};
}

}  // namespace dsl
