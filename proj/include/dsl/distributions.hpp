#pragma once

#include <span>
#include <variant>

#include "dsl/random.hpp"

namespace dsl {

/// Symmetric stable law with characteristic function exp(-scale * |t|^alpha).
class StableParams {
 public:
  /// Throws std::invalid_argument unless 0 < alpha < 2 and scale > 0.
  explicit StableParams(double alpha, double scale = 1.0);

  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double scale() const noexcept { return scale_; }

  friend bool operator==(const StableParams&, const StableParams&) = default;

 private:
  double alpha_;
  double scale_;
};

/// Two-sided Pareto-type law in the domain of normal attraction of stable(alpha):
///
///   P(X >  x) = c_plus  * x^-alpha   for x >= cutoff
///   P(X < -x) = c_minus * x^-alpha   for x >= cutoff
///
/// and the remaining mass 1 - (c_plus + c_minus) / cutoff^alpha uniform on
/// (-cutoff, cutoff). The tails are exactly Pareto past the cutoff.
class ParetoTailSpec {
 public:
  /// Throws std::invalid_argument if a parameter is out of range or the two
  /// tail masses exceed 1.
  ParetoTailSpec(double alpha, double c_plus, double c_minus, double cutoff);

  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double c_plus() const noexcept { return c_plus_; }
  [[nodiscard]] double c_minus() const noexcept { return c_minus_; }
  [[nodiscard]] double cutoff() const noexcept { return cutoff_; }
  [[nodiscard]] bool symmetric() const noexcept { return c_plus_ == c_minus_; }

  /// Probability mass of each tail piece.
  [[nodiscard]] double upper_mass() const noexcept;
  [[nodiscard]] double lower_mass() const noexcept;

  friend bool operator==(const ParetoTailSpec&, const ParetoTailSpec&) = default;

 private:
  double alpha_;
  double c_plus_;
  double c_minus_;
  double cutoff_;
};

/// Point mass at zero carrying a nominal exponent. Test fixture: it lets whole
/// experiments run with every sum identically zero.
struct ZeroLaw {
  double alpha;
  friend bool operator==(const ZeroLaw&, const ZeroLaw&) = default;
};

using LawChoice = std::variant<StableParams, ParetoTailSpec, ZeroLaw>;

[[nodiscard]] double exponent(const LawChoice& law) noexcept;

double sample_stable(const StableParams& params, Rng& rng);
double sample_pareto_dna(const ParetoTailSpec& spec, Rng& rng);

[[nodiscard]] double stable_cf(const StableParams& params, double t) noexcept;

/// Mean of cos(t x) over the samples. Throws std::invalid_argument if empty.
[[nodiscard]] double empirical_cf(std::span<const double> samples, double t);

/// Closed-form CDF P(X <= x) of the Pareto-type law.
[[nodiscard]] double pareto_cdf(const ParetoTailSpec& spec, double x) noexcept;
/// P(X > x).
[[nodiscard]] double pareto_survival(const ParetoTailSpec& spec, double x) noexcept;
/// P(|X| > x) for x >= 0.
[[nodiscard]] double pareto_abs_survival(const ParetoTailSpec& spec, double x) noexcept;

/// Draws from a LawChoice with per-law constants precomputed. This is what the
/// engine calls once per index, so it avoids re-deriving powers each draw.
class Sampler {
 public:
  explicit Sampler(const LawChoice& law);

  double operator()(Rng& rng) const;

 private:
  enum class Kind { Stable, Cauchy, Pareto, Zero };

  Kind kind_;
  double alpha_ = 1.0;
  double inv_alpha_ = 1.0;
  double tail_power_ = 0.0;  // (1 - alpha) / alpha
  double scale_factor_ = 1.0;  // scale^(1/alpha)
  double lower_mass_ = 0.0;
  double upper_mass_ = 0.0;
  double c_plus_ = 0.0;
  double c_minus_ = 0.0;
  double cutoff_ = 0.0;
};

}  // namespace dsl
