#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dsl/engine.hpp"
#include "dsl/lil_stats.hpp"
#include "json.hpp"

namespace dsl {

inline constexpr int kArtifactVersion = 1;

/// Column order of records.csv. Frozen.
inline constexpr const char* kRecordsHeader =
    "rep,n,tau1,tau2,S_n,U,V,a_n,T,B_n,B_an,s_n,gamma_n,gamma_star,"
    "chover_loglog,chover_gamma,chover_gamma_star,runmax_loglog,runmax_gamma,runmax_gamma_star";

/// Shortest text that parses back to the same double.
[[nodiscard]] std::string format_double(double x);

void write_records_csv(std::ostream& out, std::span<const ReplicationResult> results);

/// The statistic whose limit is reported as the top-level predicted_limit:
/// chover_gamma_star for the stable(alpha1) regime, chover_gamma otherwise.
[[nodiscard]] ChoverExponent headline_statistic(const Regime& regime);

[[nodiscard]] nlohmann::json limits_json(const ExperimentConfig& config);

/// Final running maxima against predictions, per replication and pooled.
/// Pooled "max" is the maximum over replications of the final running max;
/// "median" is their median (lower-middle/upper-middle mean for even counts).
[[nodiscard]] nlohmann::json summary_json(const ExperimentConfig& config,
                                          std::span<const ReplicationResult> results);

struct OutputPaths {
  std::filesystem::path records;
  std::filesystem::path summary;
  std::filesystem::path manifest;
};

[[nodiscard]] OutputPaths output_paths(const std::filesystem::path& dir);

[[nodiscard]] nlohmann::json manifest_json(const ExperimentConfig& config, const OutputPaths& paths);

}  // namespace dsl
