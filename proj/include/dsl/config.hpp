#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dsl/engine.hpp"
#include "json.hpp"

namespace dsl {

/// Environment variable that, when set to an unsigned 64-bit integer,
/// replaces both summand_seed and lag_seed.
inline constexpr const char* kSeedOverrideEnv = "DSL_SEED_OVERRIDE";

/// Strict parse of a flat config document:
///
///   {"law1": LAW, "law2": LAW, "regime": REGIME, "lag": LAG,
///    "n_max": int, "checkpoint_ratio": real (optional, 1.1),
///    "summand_seed": uint64, "lag_seed": uint64, "replications": int (optional, 1)}
///
///   LAW    {"kind": "stable", "alpha", "scale" (optional, 1)}
///        | {"kind": "pareto", "alpha", "c_plus", "c_minus", "cutoff"}   c_plus = c_minus
///        | {"kind": "zero", "alpha"}
///   REGIME {"alpha1", "alpha2", "kind": "composition", "lambda"}
///        | {"alpha1", "alpha2", "kind": "stable_alpha1", "rho"}
///        | {"alpha1", "alpha2", "kind": "stable_alpha2", "mu"}
///   LAG    {"kind": "power", "rho"} | {"kind": "log_power", "s"} | {"kind": "full"}
///        | {"kind": "random_uniform", "c"} | {"kind": "random_tau1", "c"}
///
/// Unknown or missing keys and wrong types throw ConfigError with a dotted
/// field path. The result is validated.
[[nodiscard]] ExperimentConfig config_from_json(const nlohmann::json& doc);
[[nodiscard]] nlohmann::json config_to_json(const ExperimentConfig& config);

/// Parses text; a run manifest (object with "artifact_version" and "config")
/// is accepted and its embedded config used.
[[nodiscard]] ExperimentConfig parse_config(std::string_view text);
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path& path);

/// Applies DSL_SEED_OVERRIDE if set. Throws ConfigError if it is not an
/// unsigned 64-bit integer. Returns true when applied.
bool apply_seed_override(ExperimentConfig& config);

[[nodiscard]] nlohmann::json law_to_json(const LawChoice& law);
[[nodiscard]] nlohmann::json regime_to_json(const RegimeSpec& regime);
[[nodiscard]] nlohmann::json lag_to_json(const LagSpec& lag);

}  // namespace dsl
