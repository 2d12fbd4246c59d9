#include "dsl/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "dsl/errors.hpp"

namespace dsl {

using nlohmann::json;

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path.empty() ? "config" : path, "expected an object");
  return j;
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known) throw ConfigError(join(path, item.key()), "unknown key");
  }
}

const json& member(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(join(path, key), "missing");
  return *it;
}

double real(const json& obj, const std::string& path, const char* key) {
  const json& v = member(obj, path, key);
  if (!v.is_number()) throw ConfigError(join(path, key), "expected a number");
  return v.get<double>();
}

double real_or(const json& obj, const std::string& path, const char* key, double fallback) {
  return obj.contains(key) ? real(obj, path, key) : fallback;
}

std::int64_t integer(const json& obj, const std::string& path, const char* key) {
  const json& v = member(obj, path, key);
  if (!v.is_number_integer()) throw ConfigError(join(path, key), "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw ConfigError(join(path, key), "out of range");
  }
  return v.get<std::int64_t>();
}

std::uint64_t seed(const json& obj, const char* key) {
  const json& v = member(obj, "", key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    if (v.get<std::int64_t>() < 0) throw ConfigError(key, "must be non-negative");
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  throw ConfigError(key, "expected an unsigned 64-bit integer");
}

std::string kind_of(const json& obj, const std::string& path) {
  const json& v = member(obj, path, "kind");
  if (!v.is_string()) throw ConfigError(join(path, "kind"), "expected a string");
  return v.get<std::string>();
}

template <class F>
auto rethrow_as(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
}

LawChoice law_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  const std::string kind = kind_of(j, path);
  if (kind == "stable") {
    only_keys(j, path, {"kind", "alpha", "scale"});
    const double alpha = real(j, path, "alpha");
    const double scale = real_or(j, path, "scale", 1.0);
    return rethrow_as(path, [&] { return LawChoice{StableParams(alpha, scale)}; });
  }
  if (kind == "pareto") {
    only_keys(j, path, {"kind", "alpha", "c_plus", "c_minus", "cutoff"});
    const double alpha = real(j, path, "alpha");
    const double c_plus = real(j, path, "c_plus");
    const double c_minus = real(j, path, "c_minus");
    const double cutoff = real(j, path, "cutoff");
    if (c_plus != c_minus) {
      throw ConfigError(join(path, "c_minus"), "only symmetric laws (c_plus = c_minus) are supported");
    }
    return rethrow_as(path,
                      [&] { return LawChoice{ParetoTailSpec(alpha, c_plus, c_minus, cutoff)}; });
  }
  if (kind == "zero") {
    only_keys(j, path, {"kind", "alpha"});
    const double alpha = real(j, path, "alpha");
    if (!(alpha > 0.0 && alpha < 2.0)) throw ConfigError(join(path, "alpha"), "must lie in (0, 2)");
    return LawChoice{ZeroLaw{alpha}};
  }
  throw ConfigError(join(path, "kind"), "unknown law kind '" + kind + "'");
}

RegimeSpec regime_from_json(const json& j) {
  const std::string path = "regime";
  require_object(j, path);
  const std::string kind = kind_of(j, path);
  RegimeSpec spec{0.0, 0.0, Composition{1.0}};
  if (kind == "composition") {
    only_keys(j, path, {"kind", "alpha1", "alpha2", "lambda"});
    spec.kind = Composition{real(j, path, "lambda")};
  } else if (kind == "stable_alpha1") {
    only_keys(j, path, {"kind", "alpha1", "alpha2", "rho"});
    spec.kind = StableAlpha1{real(j, path, "rho")};
  } else if (kind == "stable_alpha2") {
    only_keys(j, path, {"kind", "alpha1", "alpha2", "mu"});
    spec.kind = StableAlpha2{real(j, path, "mu")};
  } else {
    throw ConfigError("regime.kind", "unknown regime kind '" + kind + "'");
  }
  spec.alpha1 = real(j, path, "alpha1");
  spec.alpha2 = real(j, path, "alpha2");
  return spec;
}

LagSpec lag_from_json(const json& j) {
  const std::string path = "lag";
  require_object(j, path);
  const std::string kind = kind_of(j, path);
  if (kind == "power") {
    only_keys(j, path, {"kind", "rho"});
    return {PowerLag{real(j, path, "rho")}};
  }
  if (kind == "log_power") {
    only_keys(j, path, {"kind", "s"});
    return {LogPowerLag{real(j, path, "s")}};
  }
  if (kind == "full") {
    only_keys(j, path, {"kind"});
    return {FullLag{}};
  }
  if (kind == "random_uniform") {
    only_keys(j, path, {"kind", "c"});
    return {RandomUniformLag{real(j, path, "c")}};
  }
  if (kind == "random_tau1") {
    only_keys(j, path, {"kind", "c"});
    return {RandomTau1Lag{real(j, path, "c")}};
  }
  throw ConfigError("lag.kind", "unknown lag kind '" + kind + "'");
}

}  // namespace

ExperimentConfig config_from_json(const json& doc) {
  require_object(doc, "");
  only_keys(doc, "", {"law1", "law2", "regime", "lag", "n_max", "checkpoint_ratio",
                      "summand_seed", "lag_seed", "replications"});
  ExperimentConfig config{
      law_from_json(member(doc, "", "law1"), "law1"),
      law_from_json(member(doc, "", "law2"), "law2"),
      regime_from_json(member(doc, "", "regime")),
      lag_from_json(member(doc, "", "lag")),
  };
  config.n_max = integer(doc, "", "n_max");
  config.checkpoint_ratio = real_or(doc, "", "checkpoint_ratio", 1.1);
  config.summand_seed = seed(doc, "summand_seed");
  config.lag_seed = seed(doc, "lag_seed");
  if (doc.contains("replications")) {
    const std::int64_t reps = integer(doc, "", "replications");
    if (reps < 1 || reps > INT32_MAX) throw ConfigError("replications", "must lie in [1, 2^31)");
    config.replications = static_cast<int>(reps);
  }
  config.validate();
  return config;
}

json law_to_json(const LawChoice& law) {
  return std::visit(
      [](const auto& l) -> json {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, StableParams>) {
          return {{"kind", "stable"}, {"alpha", l.alpha()}, {"scale", l.scale()}};
        } else if constexpr (std::is_same_v<L, ParetoTailSpec>) {
          return {{"kind", "pareto"},       {"alpha", l.alpha()},     {"c_plus", l.c_plus()},
                  {"c_minus", l.c_minus()}, {"cutoff", l.cutoff()}};
        } else {
          return {{"kind", "zero"}, {"alpha", l.alpha}};
        }
      },
      law);
}

json regime_to_json(const RegimeSpec& regime) {
  json j = {{"alpha1", regime.alpha1}, {"alpha2", regime.alpha2}};
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Composition>) {
          j["kind"] = "composition";
          j["lambda"] = k.lambda;
        } else if constexpr (std::is_same_v<K, StableAlpha1>) {
          j["kind"] = "stable_alpha1";
          j["rho"] = k.rho;
        } else {
          j["kind"] = "stable_alpha2";
          j["mu"] = k.mu;
        }
      },
      regime.kind);
  return j;
}

json lag_to_json(const LagSpec& lag) {
  return std::visit(
      [](const auto& k) -> json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PowerLag>) {
          return {{"kind", "power"}, {"rho", k.rho}};
        } else if constexpr (std::is_same_v<K, LogPowerLag>) {
          return {{"kind", "log_power"}, {"s", k.s}};
        } else if constexpr (std::is_same_v<K, FullLag>) {
          return {{"kind", "full"}};
        } else if constexpr (std::is_same_v<K, RandomUniformLag>) {
          return {{"kind", "random_uniform"}, {"c", k.c}};
        } else {
          return {{"kind", "random_tau1"}, {"c", k.c}};
        }
      },
      lag.kind);
}

json config_to_json(const ExperimentConfig& config) {
  return {{"law1", law_to_json(config.law1)},
          {"law2", law_to_json(config.law2)},
          {"regime", regime_to_json(config.regime)},
          {"lag", lag_to_json(config.lag)},
          {"n_max", config.n_max},
          {"checkpoint_ratio", config.checkpoint_ratio},
          {"summand_seed", config.summand_seed},
          {"lag_seed", config.lag_seed},
          {"replications", config.replications}};
}

ExperimentConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("not valid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("artifact_version") && doc.contains("config")) {
    return config_from_json(doc["config"]);
  }
  return config_from_json(doc);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

bool apply_seed_override(ExperimentConfig& config) {
  const char* raw = std::getenv(kSeedOverrideEnv);
  if (raw == nullptr || *raw == '\0') return false;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ConfigError(kSeedOverrideEnv, "expected an unsigned 64-bit integer");
  }
  config.summand_seed = value;
  config.lag_seed = value;
  return true;
}

}  // namespace dsl
