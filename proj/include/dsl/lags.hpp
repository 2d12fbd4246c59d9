#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "dsl/random.hpp"
#include "dsl/scheme.hpp"

namespace dsl {

/// a_n = ceil(n^rho), 0 < rho <= 1.
struct PowerLag {
  double rho;
};
/// a_n = max(1, ceil(n (log(n + e))^-s)), s > 0.
struct LogPowerLag {
  double s;
};
/// a_n = n.
struct FullLag {};
/// a_n uniform on {1, ..., ceil(c n)}.
struct RandomUniformLag {
  double c;
};
/// a_n uniform on {1, ..., max(1, ceil(c tau1(n)))}.
struct RandomTau1Lag {
  double c;
};

using LagKind = std::variant<PowerLag, LogPowerLag, FullLag, RandomUniformLag, RandomTau1Lag>;

struct LagSpec {
  LagKind kind;

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
  [[nodiscard]] bool random() const noexcept;
  [[nodiscard]] bool needs_scheme() const noexcept;
  [[nodiscard]] std::string name() const;
};

/// Limit of s_n = log(n/a_n) / log log n for a lag family.
struct LagRegime {
  enum class Kind { Zero, Finite, Infinite };
  Kind kind = Kind::Zero;
  double s = 0.0;

  static LagRegime zero() { return {Kind::Zero, 0.0}; }
  static LagRegime finite(double s) { return {Kind::Finite, s}; }
  static LagRegime infinite() { return {Kind::Infinite, 0.0}; }
};

/// Known limit of s_n for deterministic families; nullopt for random lags,
/// where s_n has no almost-sure limit.
[[nodiscard]] std::optional<LagRegime> lag_regime(const LagSpec& spec);

/// Constant c with a_n <= c n + 1 for every n >= 1.
[[nodiscard]] double lag_growth_bound(const LagSpec& spec) noexcept;

/// Realizes a_n. Random kinds draw from `rng`, which must be a stream
/// separate from the summands. Throws ConfigError if the kind needs an rng or
/// a scheme and none is given.
std::int64_t lag(const LagSpec& spec, std::int64_t n, const Scheme* scheme = nullptr,
                 Rng* rng = nullptr);

/// Smallest n at which log log n is used. log log 16 ~ 1.02.
inline constexpr std::int64_t kMinLogLogIndex = 16;

/// log(n/a_n) / log log n. Throws std::domain_error for n < 16 or a_n < 1.
[[nodiscard]] double s_n(std::int64_t n, std::int64_t a_n);
/// log(n/a_n) + log log n.
[[nodiscard]] double gamma_n(std::int64_t n, std::int64_t a_n);
/// log(tau1(n)/tau1(a_n)) + log log n. Throws std::domain_error when
/// tau1(a_n) = 0 or tau1(n) = 0.
[[nodiscard]] double gamma_star(std::int64_t n, std::int64_t a_n, const Scheme& scheme);

struct GammaValues {
  std::int64_t n;
  std::int64_t a_n;
  double s_n;
  double gamma_n;
  std::optional<double> gamma_star;
};

[[nodiscard]] GammaValues gamma_values(std::int64_t n, std::int64_t a_n, const Scheme* scheme);

enum class Assumption { C1, C2, C1Star, C2Star };

[[nodiscard]] std::string to_string(Assumption which);

/// Empirical supremum of a_n/tau1(n) (C1, C1*) or a_n/n (C2, C2*) over
/// n in [n_lo, n_hi] and over replications.
///
/// The pass/fail bound is either declared by the lag family (e.g. a_n <= n
/// for every deterministic family, so C2 holds with bound 1) or, when the
/// family says nothing about the ratio, taken as 1.5 times the supremum over
/// the lower half of the range in log scale, so a ratio still growing at the
/// top of the range fails. A finite scan cannot settle a limsup; the report
/// states what was scanned.
struct AssumptionReport {
  Assumption which;
  std::int64_t n_lo = 0;
  std::int64_t n_hi = 0;
  int replications = 1;
  double sup_ratio = 0.0;
  std::int64_t argsup = 0;
  double sup_lower_half = 0.0;
  double sup_upper_half = 0.0;
  double bound = 0.0;
  bool bound_declared = false;
  bool pass = false;
};

/// Throws ConfigError when starred-ness and lag randomness disagree, or when
/// C1-type checks are requested without a scheme.
AssumptionReport check_lag_assumption(const LagSpec& spec, Assumption which,
                                      const Scheme* scheme, std::int64_t n_max,
                                      int replications, std::uint64_t seed = 0);

}  // namespace dsl
