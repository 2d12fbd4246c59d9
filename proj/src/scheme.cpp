#include "dsl/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dsl {

double c3_mu_bound(double alpha1, double alpha2) noexcept {
  return (alpha2 - alpha1) / alpha2;
}

void RegimeSpec::validate() const {
  if (!(alpha1 > 0.0 && alpha1 <= alpha2 && alpha2 < 2.0)) {
    throw std::invalid_argument("regime needs 0 < alpha1 <= alpha2 < 2");
  }
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Composition>) {
          if (!(k.lambda > 0.0) || !std::isfinite(k.lambda)) {
            throw std::invalid_argument("composition lambda must be positive and finite");
          }
          if (collapsed()) {
            throw std::invalid_argument("composition regime requires alpha1 < alpha2");
          }
        } else if constexpr (std::is_same_v<K, StableAlpha1>) {
          if (!(k.rho > alpha1 / alpha2 && k.rho < 1.0)) {
            throw std::invalid_argument("stable_alpha1 rho must lie in (alpha1/alpha2, 1)");
          }
        } else {
          const double bound = c3_mu_bound(alpha1, alpha2);
          if (!(k.mu > bound) || !std::isfinite(k.mu)) {
            std::ostringstream msg;
            msg << "stable_alpha2 mu must exceed (alpha2 - alpha1)/alpha2 = " << bound;
            throw std::invalid_argument(msg.str());
          }
        }
      },
      kind);
}

Scheme::Scheme(RegimeSpec regime) : regime_(regime) {
  regime_.validate();
  const double ratio = regime_.alpha1 / regime_.alpha2;
  if (const auto* c = std::get_if<Composition>(&regime_.kind)) {
    coef_ = std::pow(c->lambda, 1.0 / regime_.alpha2);
    power_ = ratio;
  } else if (const auto* s1 = std::get_if<StableAlpha1>(&regime_.kind)) {
    power_ = s1->rho;
  } else {
    power_ = ratio;
    log_power_ = std::get<StableAlpha2>(regime_.kind).mu + kC3Margin;
  }

  // Beyond n0, g(n) - g(n-1) <= sup g' on [n-1, n] <= coef * power * (n-1)^(power-1) < 1.
  // The log factor only lowers g' (it is <= 1 and decreasing). With power = 1
  // (collapsed StableAlpha2) g' <= log(n+e)^-mu' < 1 everywhere.
  std::int64_t n0 = 2;
  if (power_ < 1.0) {
    const double root = std::pow(coef_ * power_, 1.0 / (1.0 - power_));
    if (!(root < static_cast<double>(kMaxHead))) {
      throw std::invalid_argument("scheme growth function is too steep to tabulate");
    }
    n0 = static_cast<std::int64_t>(root) + 2;
  }
  // With the log factor, g' > 0 needs power * log(x + e) > mu' x / (x + e);
  // power * log(x + e) >= mu' suffices.
  if (log_power_ > 0.0) {
    const double rise = std::exp(log_power_ / power_);
    if (!(rise < static_cast<double>(kMaxHead))) {
      throw std::invalid_argument("scheme growth function is not increasing within the table limit");
    }
    n0 = std::max(n0, static_cast<std::int64_t>(rise) + 2);
  }

  head_.push_back(0);
  for (std::int64_t n = 1;; ++n) {
    const auto target = static_cast<std::int64_t>(std::floor(growth(n)));
    const std::int64_t prev = head_.back();
    const std::int64_t clamped = std::clamp(target, prev, prev + 1);
    if (n >= n0 && clamped == target) break;
    head_.push_back(clamped);
    if (static_cast<std::int64_t>(head_.size()) > kMaxHead) {
      throw std::invalid_argument("scheme clamping deficit does not close within the table limit");
    }
  }
}

double Scheme::growth(std::int64_t n) const noexcept {
  if (n <= 0) return 0.0;
  const double x = static_cast<double>(n);
  double g = coef_ * std::pow(x, power_);
  if (log_power_ != 0.0) g *= std::pow(std::log(x + std::numbers::e), -log_power_);
  return g;
}

std::int64_t Scheme::tau1(std::int64_t n) const noexcept {
  if (n <= 0) return 0;
  if (n < static_cast<std::int64_t>(head_.size())) return head_[static_cast<std::size_t>(n)];
  return static_cast<std::int64_t>(std::floor(growth(n)));
}

std::int64_t Scheme::tau(int j, std::int64_t n) const {
  if (j == 1) return tau1(n);
  if (j == 2) return tau2(n);
  throw std::invalid_argument("tau index j must be 1 or 2");
}

Law Scheme::indicator(std::int64_t n) const noexcept {
  return tau1(n) > tau1(n - 1) ? Law::G1 : Law::G2;
}

double Scheme::regime_ratio(std::int64_t n) const {
  const std::int64_t t2 = tau2(n);
  if (t2 <= 0) throw std::domain_error("regime_ratio: tau2(n) = 0, n too small");
  return std::pow(static_cast<double>(tau1(n)), regime_.alpha2) /
         std::pow(static_cast<double>(t2), regime_.alpha1);
}

std::int64_t Scheme::next_g1_after(std::int64_t k) const noexcept {
  const std::int64_t base = tau1(k);
  // Gallop forward until tau1 moves, then bisect; tau1 is nondecreasing.
  std::int64_t lo = k;
  std::int64_t step = 1;
  std::int64_t hi = k + 1;
  while (tau1(hi) == base) {
    lo = hi;
    step *= 2;
    hi = k + step;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (tau1(mid) == base) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

std::optional<std::int64_t> first_c3_violation(const Scheme& scheme, double mu,
                                               std::int64_t n_lo, std::int64_t n_hi) {
  const auto& r = scheme.regime();
  const double bound = c3_mu_bound(r.alpha1, r.alpha2);
  if (!(mu > bound)) {
    std::ostringstream msg;
    msg << "C3 requires mu > (alpha2 - alpha1)/alpha2 = " << bound << ", got " << mu;
    throw std::invalid_argument(msg.str());
  }
  if (n_lo < 3 || n_hi < n_lo) throw std::invalid_argument("C3 scan range must lie in [3, n_max]");
  const double power = r.alpha1 / r.alpha2;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const double x = static_cast<double>(n);
    const double envelope = std::pow(x, power) * std::pow(std::log(x), -mu);
    if (!(static_cast<double>(scheme.tau1(n)) < envelope)) return n;
  }
  return std::nullopt;
}

bool check_c3(const Scheme& scheme, double mu, std::int64_t n_lo, std::int64_t n_hi) {
  return !first_c3_violation(scheme, mu, n_lo, n_hi).has_value();
}

}  // namespace dsl
