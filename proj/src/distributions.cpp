#include "dsl/distributions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dsl {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool valid_exponent(double alpha) { return alpha > 0.0 && alpha < 2.0; }

// Chambers-Mallows-Stuck for beta = 0, unit scale:
//   X = sin(aV) / cos(V)^(1/a) * (cos((1-a)V) / W)^((1-a)/a)
// with V uniform on (-pi/2, pi/2), W standard exponential.
// Evaluated through logs so the only powers are one exp.
double cms_unit(double alpha, double inv_alpha, double tail_power, Rng& rng) {
  const double v = std::numbers::pi * (uniform_open(rng) - 0.5);
  const double w = -std::log(uniform_open(rng));
  const double log_mag = tail_power * (std::log(std::cos((1.0 - alpha) * v)) - std::log(w)) -
                         inv_alpha * std::log(std::cos(v));
  return std::sin(alpha * v) * std::exp(log_mag);
}

double cauchy_unit(Rng& rng) {
  return std::tan(std::numbers::pi * (uniform_open(rng) - 0.5));
}

double pareto_quantile(double u, double alpha, double lower_mass, double upper_mass,
                       double c_minus, double c_plus, double cutoff) {
  if (u < lower_mass) return -std::pow(c_minus / u, 1.0 / alpha);
  if (u > 1.0 - upper_mass) return std::pow(c_plus / (1.0 - u), 1.0 / alpha);
  const double body = 1.0 - lower_mass - upper_mass;
  return -cutoff + 2.0 * cutoff * (u - lower_mass) / body;
}

}  // namespace

StableParams::StableParams(double alpha, double scale) : alpha_(alpha), scale_(scale) {
  require(valid_exponent(alpha), "stable alpha must lie in (0, 2)");
  require(scale > 0.0 && std::isfinite(scale), "stable scale must be positive");
}

ParetoTailSpec::ParetoTailSpec(double alpha, double c_plus, double c_minus, double cutoff)
    : alpha_(alpha), c_plus_(c_plus), c_minus_(c_minus), cutoff_(cutoff) {
  require(valid_exponent(alpha), "pareto alpha must lie in (0, 2)");
  require(c_plus > 0.0, "pareto c_plus must be positive");
  require(c_minus > 0.0, "pareto c_minus must be positive");
  require(cutoff > 0.0 && std::isfinite(cutoff), "pareto cutoff must be positive");
  require(upper_mass() + lower_mass() <= 1.0,
          "pareto tail masses (c_plus + c_minus) / cutoff^alpha exceed 1");
}

double ParetoTailSpec::upper_mass() const noexcept {
  return c_plus_ * std::pow(cutoff_, -alpha_);
}

double ParetoTailSpec::lower_mass() const noexcept {
  return c_minus_ * std::pow(cutoff_, -alpha_);
}

double exponent(const LawChoice& law) noexcept {
  return std::visit(
      [](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ZeroLaw>) {
          return l.alpha;
        } else {
          return l.alpha();
        }
      },
      law);
}

double sample_stable(const StableParams& params, Rng& rng) {
  const double alpha = params.alpha();
  const double scale_factor = std::pow(params.scale(), 1.0 / alpha);
  if (alpha == 1.0) return scale_factor * cauchy_unit(rng);
  return scale_factor * cms_unit(alpha, 1.0 / alpha, (1.0 - alpha) / alpha, rng);
}

double sample_pareto_dna(const ParetoTailSpec& spec, Rng& rng) {
  return pareto_quantile(uniform_open(rng), spec.alpha(), spec.lower_mass(),
                         spec.upper_mass(), spec.c_minus(), spec.c_plus(), spec.cutoff());
}

double stable_cf(const StableParams& params, double t) noexcept {
  return std::exp(-params.scale() * std::pow(std::fabs(t), params.alpha()));
}

double empirical_cf(std::span<const double> samples, double t) {
  if (samples.empty()) throw std::invalid_argument("empirical_cf needs at least one sample");
  double acc = 0.0;
  for (double x : samples) acc += std::cos(t * x);
  return acc / static_cast<double>(samples.size());
}

double pareto_cdf(const ParetoTailSpec& spec, double x) noexcept {
  const double x0 = spec.cutoff();
  if (x <= -x0) return spec.c_minus() * std::pow(-x, -spec.alpha());
  if (x >= x0) return 1.0 - spec.c_plus() * std::pow(x, -spec.alpha());
  const double body = 1.0 - spec.lower_mass() - spec.upper_mass();
  return spec.lower_mass() + body * (x + x0) / (2.0 * x0);
}

double pareto_survival(const ParetoTailSpec& spec, double x) noexcept {
  if (x >= spec.cutoff()) return spec.c_plus() * std::pow(x, -spec.alpha());
  return 1.0 - pareto_cdf(spec, x);
}

double pareto_abs_survival(const ParetoTailSpec& spec, double x) noexcept {
  if (x >= spec.cutoff()) return (spec.c_plus() + spec.c_minus()) * std::pow(x, -spec.alpha());
  x = std::fabs(x);
  return pareto_survival(spec, x) + pareto_cdf(spec, -x);
}

Sampler::Sampler(const LawChoice& law) {
  if (const auto* p = std::get_if<StableParams>(&law)) {
    alpha_ = p->alpha();
    inv_alpha_ = 1.0 / alpha_;
    tail_power_ = (1.0 - alpha_) / alpha_;
    scale_factor_ = std::pow(p->scale(), inv_alpha_);
    kind_ = alpha_ == 1.0 ? Kind::Cauchy : Kind::Stable;
  } else if (const auto* s = std::get_if<ParetoTailSpec>(&law)) {
    kind_ = Kind::Pareto;
    alpha_ = s->alpha();
    lower_mass_ = s->lower_mass();
    upper_mass_ = s->upper_mass();
    c_plus_ = s->c_plus();
    c_minus_ = s->c_minus();
    cutoff_ = s->cutoff();
  } else {
    kind_ = Kind::Zero;
  }
}

double Sampler::operator()(Rng& rng) const {
  switch (kind_) {
    case Kind::Stable:
      return scale_factor_ * cms_unit(alpha_, inv_alpha_, tail_power_, rng);
    case Kind::Cauchy:
      return scale_factor_ * cauchy_unit(rng);
    case Kind::Pareto:
      return pareto_quantile(uniform_open(rng), alpha_, lower_mass_, upper_mass_, c_minus_,
                             c_plus_, cutoff_);
    case Kind::Zero:
      break;
  }
  return 0.0;
}

}  // namespace dsl
