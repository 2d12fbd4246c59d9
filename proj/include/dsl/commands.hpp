#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string_view>
#include <vector>

#include "dsl/distributions.hpp"
#include "dsl/engine.hpp"

namespace dsl {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // validation failure or internal error
inline constexpr int kInvalid = 2;
inline constexpr int kNumericAbort = 3;
}  // namespace exit_code

/// replicate() followed by annotate() on every replication.
[[nodiscard]] std::vector<ReplicationResult> simulate(const ExperimentConfig& config,
                                                      int threads = 1);

struct RunOptions {
  std::filesystem::path config;
  std::filesystem::path out_dir;
  int threads = 1;
  bool quiet = false;
};

/// Writes records.csv, summary.json and manifest.json into out_dir.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

/// Regime, normalizer, branch and predicted limits as JSON. No simulation.
int cmd_limits(const std::filesystem::path& config, std::ostream& out, std::ostream& err);

/// Integral-test verdict and evidence as JSON.
int cmd_classify(std::string_view fn_spec, int K, int window, std::ostream& out,
                 std::ostream& err);

/// CSV rows n,tau1,tau2,regime_ratio on a geometric grid up to n_max (the
/// config's n_max when 0).
int cmd_scheme(const std::filesystem::path& config, std::int64_t n_max, double ratio,
               std::ostream& out, std::ostream& err);

/// Runs the goodness-of-fit suite; one PASS/FAIL line per check.
int cmd_validate(std::string_view law_spec, std::int64_t draws, std::uint64_t seed,
                 std::ostream& out, std::ostream& err);

/// "stable:alpha=A[,scale=L]", "pareto:alpha=A,c_plus=P,c_minus=M,cutoff=X"
/// or "zero:alpha=A". Throws std::invalid_argument.
[[nodiscard]] LawChoice parse_law_spec(std::string_view text);

}  // namespace dsl
