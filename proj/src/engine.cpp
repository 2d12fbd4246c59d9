#include "dsl/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

#include "dsl/accumulator.hpp"
#include "dsl/errors.hpp"
#include "dsl/random.hpp"

namespace dsl {

namespace {

void check_law(const LawChoice& law, double alpha, const char* field, const char* slot) {
  if (exponent(law) != alpha) {
    throw ConfigError(field, std::string("law exponent must equal regime.") + slot);
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  try {
    regime.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("regime", e.what());
  }
  check_law(law1, regime.alpha1, "law1", "alpha1");
  check_law(law2, regime.alpha2, "law2", "alpha2");
  try {
    lag.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("lag", e.what());
  }
  if (n_max < kMinNMax) throw ConfigError("n_max", "must be >= 16");
  if (!(checkpoint_ratio > 1.0) || !std::isfinite(checkpoint_ratio)) {
    throw ConfigError("checkpoint_ratio", "must be a finite number > 1");
  }
  if (replications < 1) throw ConfigError("replications", "must be >= 1");
}

std::vector<std::int64_t> checkpoint_grid(std::int64_t n_max, double q) {
  if (n_max < kMinNMax) throw ConfigError("n_max", "must be >= 16");
  if (!(q > 1.0) || !std::isfinite(q)) throw ConfigError("checkpoint_ratio", "must be > 1");
  std::vector<std::int64_t> grid;
  const auto top = static_cast<double>(n_max);
  for (int k = 0;; ++k) {
    const double v = std::ceil(std::pow(q, k));
    if (v > top) break;
    const std::int64_t n = std::max<std::int64_t>(kMinNMax, static_cast<std::int64_t>(v));
    if (grid.empty() || grid.back() != n) grid.push_back(n);
  }
  if (grid.empty() || grid.back() != n_max) grid.push_back(n_max);
  return grid;
}

std::optional<std::size_t> pending_bound(const ExperimentConfig& config) {
  const double q = config.checkpoint_ratio;
  if (q < 1.05) return std::nullopt;
  const double c = lag_growth_bound(config.lag);
  return static_cast<std::size_t>(std::ceil(std::log1p(c) / std::log(q))) + 2;
}

namespace {

struct Pending {
  std::int64_t due;
  std::size_t record;
  double S_n;
};

}  // namespace

ReplicationResult run_experiment(const ExperimentConfig& config, std::uint64_t rep,
                                 const Scheme* scheme) {
  config.validate();
  std::optional<Scheme> own;
  if (scheme == nullptr) scheme = &own.emplace(config.regime);

  const auto grid = checkpoint_grid(config.n_max, config.checkpoint_ratio);
  const auto bound = pending_bound(config);
  const Sampler draw1(config.law1);
  const Sampler draw2(config.law2);
  Rng summands(derive_seed(config.summand_seed, rep, Stream::Summands));
  Rng lags(derive_seed(config.lag_seed, rep, Stream::Lags));

  ReplicationResult out;
  out.rep = rep;
  out.records.resize(grid.size());

  CompensatedSum U;
  CompensatedSum V;
  double max_abs = 0.0;
  std::int64_t g1 = 0;
  std::int64_t next_g1 = scheme->next_g1_after(0);
  std::size_t next_cp = 0;
  std::vector<Pending> pending;
  std::int64_t next_due = std::numeric_limits<std::int64_t>::max();

  for (std::int64_t k = 1; k <= config.n_max || !pending.empty(); ++k) {
    double x;
    if (k == next_g1) {
      x = draw1(summands);
      U.add(x);
      ++g1;
      next_g1 = scheme->next_g1_after(k);
    } else {
      x = draw2(summands);
      V.add(x);
    }
    const double S = U.value() + V.value();
    if (!std::isfinite(x) || !std::isfinite(S) || !U.finite() || !V.finite()) {
      throw NumericAbort(k, rep);
    }
    max_abs = std::max(max_abs, std::fabs(S));

    if (k == next_due) {
      next_due = std::numeric_limits<std::int64_t>::max();
      std::erase_if(pending, [&](const Pending& p) {
        if (p.due == k) {
          out.records[p.record].T = S - p.S_n;
          return true;
        }
        next_due = std::min(next_due, p.due);
        return false;
      });
    }

    if (next_cp < grid.size() && k == grid[next_cp]) {
      auto& r = out.records[next_cp];
      r.rep = rep;
      r.n = k;
      r.tau1 = g1;
      r.tau2 = k - g1;
      r.S = S;
      r.U = U.value();
      r.V = V.value();
      r.max_abs_S = max_abs;
      r.a_n = lag(config.lag, k, scheme, &lags);
      pending.push_back({k + r.a_n, next_cp, S});
      next_due = std::min(next_due, k + r.a_n);
      out.max_pending = std::max(out.max_pending, pending.size());
      if (bound && pending.size() > *bound) {
        throw std::logic_error("pending window queue exceeded its bound at n = " +
                               std::to_string(k));
      }
      ++next_cp;
    }
    out.draws = k;
  }
  out.g1_draws = g1;
  return out;
}

std::vector<ReplicationResult> replicate(const ExperimentConfig& config, int threads) {
  config.validate();
  const Scheme scheme(config.regime);
  const auto reps = static_cast<std::size_t>(config.replications);
  std::vector<ReplicationResult> results(reps);
  std::vector<std::exception_ptr> errors(reps);
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    for (std::size_t r = next++; r < reps; r = next++) {
      try {
        results[r] = run_experiment(config, r, &scheme);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  const auto n_threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, reps);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace dsl
