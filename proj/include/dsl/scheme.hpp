#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace dsl {

enum class Law { G1, G2 };

/// (tau1(n))^alpha2 / (tau2(n))^alpha1 -> lambda, 0 < lambda < infinity.
struct Composition {
  double lambda;
};
/// tau1(n) = n^rho with alpha1/alpha2 < rho < 1: the ratio diverges.
struct StableAlpha1 {
  double rho;
};
/// tau1(n) below n^(alpha1/alpha2) (log n)^-mu, mu > (alpha2 - alpha1)/alpha2:
/// the ratio vanishes.
struct StableAlpha2 {
  double mu;
};

using RegimeKind = std::variant<Composition, StableAlpha1, StableAlpha2>;

struct RegimeSpec {
  double alpha1;
  double alpha2;
  RegimeKind kind;

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
  [[nodiscard]] bool collapsed() const noexcept { return alpha1 == alpha2; }
};

/// Lower bound (alpha2 - alpha1) / alpha2 that mu must exceed.
[[nodiscard]] double c3_mu_bound(double alpha1, double alpha2) noexcept;

/// Margin added to the requested mu when building a StableAlpha2 scheme, so
/// that the resulting tau1 sits strictly inside the requested envelope.
inline constexpr double kC3Margin = 0.1;

/// Deterministic assignment of indices to G1/G2.
///
/// tau1(n) follows floor(g(n)) for a closed-form growth function g:
///   Composition(lambda)  g(n) = lambda^(1/alpha2) n^(alpha1/alpha2)
///   StableAlpha1(rho)    g(n) = n^rho
///   StableAlpha2(mu)     g(n) = n^(alpha1/alpha2) (log(n + e))^-(mu + kC3Margin)
/// The composition constant follows from g(n)^alpha2 / n^alpha1 = lambda and
/// tau2(n) ~ n.
///
/// Where floor(g) would jump by more than one (or step back) at small n, tau1
/// is clamped to tau1(n-1) + {0, 1} and the deficit is carried. Past a point
/// n0 where g' < 1 the clamped sequence meets floor(g) and stays on it; tau1
/// is tabulated up to that point and evaluated in closed form after it.
class Scheme {
 public:
  /// Throws std::invalid_argument for an invalid regime, or when the clamped
  /// head segment would exceed kMaxHead entries.
  explicit Scheme(RegimeSpec regime);

  [[nodiscard]] const RegimeSpec& regime() const noexcept { return regime_; }

  [[nodiscard]] double growth(std::int64_t n) const noexcept;

  [[nodiscard]] std::int64_t tau1(std::int64_t n) const noexcept;
  [[nodiscard]] std::int64_t tau2(std::int64_t n) const noexcept { return n - tau1(n); }
  /// j must be 1 or 2.
  [[nodiscard]] std::int64_t tau(int j, std::int64_t n) const;

  [[nodiscard]] Law indicator(std::int64_t n) const noexcept;

  /// tau1^alpha2 / tau2^alpha1. Throws std::domain_error when tau2(n) = 0.
  [[nodiscard]] double regime_ratio(std::int64_t n) const;

  /// Smallest index > k assigned to G1.
  [[nodiscard]] std::int64_t next_g1_after(std::int64_t k) const noexcept;

  /// First n from which tau1(n) = floor(g(n)) holds for good.
  [[nodiscard]] std::int64_t synced_from() const noexcept {
    return static_cast<std::int64_t>(head_.size());
  }

  static constexpr std::int64_t kMaxHead = 50'000'000;

 private:
  RegimeSpec regime_;
  double coef_ = 1.0;
  double power_ = 1.0;
  double log_power_ = 0.0;
  std::vector<std::int64_t> head_;
};

inline Scheme build_scheme(const RegimeSpec& regime) { return Scheme(regime); }

/// First n in [n_lo, n_hi] with tau1(n) >= n^(alpha1/alpha2) (log n)^-mu, if any.
/// Throws std::invalid_argument if mu does not exceed the bound or n_lo < 3.
std::optional<std::int64_t> first_c3_violation(const Scheme& scheme, double mu,
                                               std::int64_t n_lo, std::int64_t n_hi);

/// True iff the strict C3 envelope holds at every n in [n_lo, n_hi].
bool check_c3(const Scheme& scheme, double mu, std::int64_t n_lo, std::int64_t n_hi);

}  // namespace dsl
