#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dsl {

/// f(x) = (log(x + e))^eta.
struct LogPower {
  double eta;
};
/// f(x) = (log(x + e))^eta * (log log(x + e^2))^theta.
struct Composite {
  double eta;
  double theta;
};
/// Sampled f on an increasing grid. Evaluated by linear interpolation of
/// log f against log x; held at f(x.front()) below the grid and continued
/// along the last segment's log-log slope above it.
struct Tabulated {
  std::vector<double> x;
  std::vector<double> f;
};

/// Test function f in the integral of 1/(x f(x)) over [1, infinity), times a
/// positive constant.
struct TestFn {
  std::variant<LogPower, Composite, Tabulated> kind;
  double scale = 1.0;

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] bool analytic() const noexcept { return !std::holds_alternative<Tabulated>(kind); }
  [[nodiscard]] TestFn scaled(double c) const;
  [[nodiscard]] std::string describe() const;
};

/// Parses "logpow:ETA", "composite:ETA,THETA" or "table:X1=F1,X2=F2,...".
/// Throws std::invalid_argument.
TestFn parse_test_fn(std::string_view text);

enum class Verdict { Convergent, Divergent, Inconclusive };

[[nodiscard]] std::string to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::Inconclusive;
  bool analytic = false;
  /// (K', sum_{k=1}^{K'} 1/f(2^k)) at powers of two up to K, and at K.
  std::vector<std::pair<int, double>> partial_sums;
  /// Fitted decay exponent p of 1/f(2^k) ~ k^-p over the tail window.
  double tail_slope = 0.0;
  int K = 0;
  int window = 0;
};

/// Convergent iff eta > 1, or eta = 1 and theta > 1. Throws
/// std::invalid_argument for Tabulated.
Classification classify_analytic(const TestFn& fn);

/// sum_{k=1}^{K} 1/f(2^k). K in [1, 1000].
double dyadic_partial_sum(const TestFn& fn, int K);

/// Least-squares slope of log(1/f(2^k)) against log k over the last `window`
/// terms k = K - window + 1, ..., K. Decay faster than k^-1.05 is Convergent,
/// slower than k^-0.95 Divergent, anything between Inconclusive.
/// Requires K >= 2 * window, window >= 2; throws std::invalid_argument for a
/// non-monotone or non-positive Tabulated f.
Classification classify_numeric(const TestFn& fn, int K, int window);

}  // namespace dsl
