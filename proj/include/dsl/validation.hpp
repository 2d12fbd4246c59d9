#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dsl/distributions.hpp"

namespace dsl {

struct CheckResult {
  std::string name;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Asymptotic Kolmogorov survival function Q(x) = 2 sum (-1)^(k-1) exp(-2 k^2 x^2).
[[nodiscard]] double kolmogorov_survival(double x) noexcept;

/// Two-sample Kolmogorov-Smirnov p-value (asymptotic). Inputs are copied and sorted.
[[nodiscard]] double ks_two_sample_pvalue(std::span<const double> a, std::span<const double> b);

/// Goodness-of-fit checks for one law, N draws each, from a fixed seed:
///   stable:  empirical CF vs exp(-scale |t|^alpha) at t in {0.5, 1, 2}, median
///            near zero, sign-flip KS test, and the Cauchy quartile when alpha = 1;
///   pareto:  exact tail fractions at several x, body fraction, sign-flip KS
///            test when symmetric.
/// Tolerances scale as 1/sqrt(N) and match 0.005 (CF) and 0.002 (quartile)
/// at N = 10^6.
std::vector<CheckResult> run_validation_suite(const LawChoice& law, std::int64_t draws,
                                              std::uint64_t seed);

}  // namespace dsl
