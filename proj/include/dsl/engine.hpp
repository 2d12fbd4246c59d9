#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dsl/distributions.hpp"
#include "dsl/lags.hpp"
#include "dsl/record.hpp"
#include "dsl/scheme.hpp"

namespace dsl {

struct ExperimentConfig {
  LawChoice law1;
  LawChoice law2;
  RegimeSpec regime;
  LagSpec lag;
  std::int64_t n_max = 16;
  double checkpoint_ratio = 1.1;
  std::uint64_t summand_seed = 0;
  std::uint64_t lag_seed = 0;
  int replications = 1;

  /// Throws ConfigError naming the first offending field.
  void validate() const;
};

/// Smallest n_max accepted by the engine; log log n is used from here on.
inline constexpr std::int64_t kMinNMax = 16;

/// max(16, ceil(q^k)) for k = 0, 1, ..., deduplicated and <= n_max, followed
/// by n_max itself if the geometric grid misses it.
[[nodiscard]] std::vector<std::int64_t> checkpoint_grid(std::int64_t n_max, double q);

/// ceil(log_q(1 + c)) + 2 for q >= 1.05; nullopt when q is below that.
[[nodiscard]] std::optional<std::size_t> pending_bound(const ExperimentConfig& config);

struct ReplicationResult {
  std::uint64_t rep = 0;
  std::vector<CheckpointRecord> records;  // stream fields only
  std::size_t max_pending = 0;
  std::int64_t draws = 0;  // last index generated (n_max or the last window end)
  std::int64_t g1_draws = 0;
};

/// One streaming pass. The stream runs past n_max until every checkpoint's
/// window n + a_n is closed, so T is always present.
///
/// Throws NumericAbort when a summand or running sum stops being finite, and
/// std::logic_error if the pending-queue bound is exceeded. `scheme` may be
/// passed to share one table across replications.
[[nodiscard]] ReplicationResult run_experiment(const ExperimentConfig& config,
                                               std::uint64_t rep = 0,
                                               const Scheme* scheme = nullptr);

/// Runs replications 0..R-1 on up to `threads` workers. Results are ordered
/// by replication. If any replication throws, the exception of the lowest
/// failing replication is rethrown after all workers finish.
[[nodiscard]] std::vector<ReplicationResult> replicate(const ExperimentConfig& config,
                                                       int threads = 1);

}  // namespace dsl
