#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsl/integral_test.hpp"
#include "dsl/lags.hpp"
#include "dsl/record.hpp"
#include "dsl/scheme.hpp"

namespace dsl {

/// Which stable law the normalized sums approach.
enum class LimitKind { Composition, StableAlpha1, StableAlpha2 };

struct Regime {
  LimitKind kind;
  double alpha1;
  double alpha2;

  [[nodiscard]] bool collapsed() const noexcept { return alpha1 == alpha2; }
  [[nodiscard]] std::string name() const;
};

[[nodiscard]] Regime classify_regime(const RegimeSpec& spec) noexcept;

/// B_n:
///   Composition   n^(1/alpha2)
///   StableAlpha1  tau1(n)^(1/alpha1)
///   StableAlpha2  tau2(n)^(1/alpha2)
///   alpha1 = alpha2  n^(1/alpha)
/// Throws std::domain_error when the count it needs is 0.
[[nodiscard]] double normalizer(const Regime& regime, const Scheme& scheme, std::int64_t n);
[[nodiscard]] std::string normalizer_formula(const Regime& regime);

/// |T/B|^(1/exponent); 0 when T = 0. Throws std::domain_error unless B > 0
/// and exponent > 0.
[[nodiscard]] double chover_stat(double T, double B, double exponent);

/// Limit of |T_n / B_{a_n}|^(1/gamma) for the regime:
///   Composition: e^(1/alpha1) at s = 0, e^(1/alpha2) at s = infinity,
///                exp((alpha1 s + alpha2) / ((s + 1) alpha1 alpha2)) in between;
///   StableAlpha1: e^(1/alpha1) (with gamma*), StableAlpha2: e^(1/alpha2).
[[nodiscard]] double predicted_limit(const Regime& regime, const LagRegime& lag_regime) noexcept;

/// Limit of |T_n / B_n|^(1/log log n).
[[nodiscard]] double loglog_limit(const Regime& regime) noexcept;

/// Short identifier of the limit statement that applies.
[[nodiscard]] std::string branch_name(const Regime& regime,
                                      const std::optional<LagRegime>& lag_regime);

enum class ChoverExponent { LogLog, Gamma, GammaStar };

[[nodiscard]] std::string to_string(ChoverExponent e);

/// Predicted limit for one statistic, or nullopt when no result covers it
/// (e.g. the gamma statistic under a random lag with no limiting s).
[[nodiscard]] std::optional<double> predicted_for(const Regime& regime, ChoverExponent which,
                                                  const std::optional<LagRegime>& lag_regime);

struct ChoverSeries {
  ChoverExponent exponent = ChoverExponent::LogLog;
  std::vector<std::optional<double>> values;   // R_n
  std::vector<std::optional<double>> running;  // M_n = max_{k <= n} R_k
};

/// Running maximum that skips absent entries; absent until the first value.
[[nodiscard]] std::vector<std::optional<double>> running_max(
    std::span<const std::optional<double>> values);
[[nodiscard]] ChoverSeries running_max(ChoverSeries series);

[[nodiscard]] ChoverSeries chover_series(std::span<const CheckpointRecord> records,
                                         ChoverExponent which);

enum class AlphaSlot { Alpha1, Alpha2 };
enum class SeriesSource { PartialSum, DelayedSum };

/// |X_n| / (B_n f(n)^((1 + delta)/alpha)) with X = S or T, per record.
/// Absent where B_n or T is absent.
[[nodiscard]] std::vector<std::optional<double>> dichotomy_series(
    std::span<const CheckpointRecord> records, const TestFn& f, AlphaSlot slot, double delta,
    const Regime& regime, SeriesSource source = SeriesSource::DelayedSum);

/// max_{k <= n} |S_k| / (n f(n))^(1/alpha), per record. Tends to 0 for a
/// single law when the integral of 1/(x f) is finite.
[[nodiscard]] std::vector<double> max_partial_sum_series(std::span<const CheckpointRecord> records,
                                                         const TestFn& f, double alpha);

/// Fills B_n, B_an, s_n, gamma_n, gamma_star, the three Chover statistics
/// and their running maxima. Records must be one replication, ascending in n.
void annotate(std::vector<CheckpointRecord>& records, const Regime& regime, const Scheme& scheme);

}  // namespace dsl
