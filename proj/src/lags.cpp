#include "dsl/lags.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dsl/errors.hpp"

namespace dsl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double log_log(std::int64_t n) {
  if (n < kMinLogLogIndex) {
    throw std::domain_error("log log n needs n >= 16, got " + std::to_string(n));
  }
  return std::log(std::log(static_cast<double>(n)));
}

std::int64_t ceil_positive(double x) {
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(x)));
}

}  // namespace

void LagSpec::validate() const {
  std::visit(overloaded{
                 [](const PowerLag& k) {
                   if (!(k.rho > 0.0 && k.rho <= 1.0))
                     throw std::invalid_argument("power lag rho must lie in (0, 1]");
                 },
                 [](const LogPowerLag& k) {
                   if (!(k.s > 0.0) || !std::isfinite(k.s))
                     throw std::invalid_argument("log-power lag s must be positive");
                 },
                 [](const FullLag&) {},
                 [](const RandomUniformLag& k) {
                   if (!(k.c > 0.0) || !std::isfinite(k.c))
                     throw std::invalid_argument("random uniform lag c must be positive");
                 },
                 [](const RandomTau1Lag& k) {
                   if (!(k.c > 0.0) || !std::isfinite(k.c))
                     throw std::invalid_argument("random tau1 lag c must be positive");
                 },
             },
             kind);
}

bool LagSpec::random() const noexcept {
  return std::holds_alternative<RandomUniformLag>(kind) ||
         std::holds_alternative<RandomTau1Lag>(kind);
}

bool LagSpec::needs_scheme() const noexcept {
  return std::holds_alternative<RandomTau1Lag>(kind);
}

std::string LagSpec::name() const {
  return std::visit(overloaded{
                        [](const PowerLag&) { return std::string("power"); },
                        [](const LogPowerLag&) { return std::string("log_power"); },
                        [](const FullLag&) { return std::string("full"); },
                        [](const RandomUniformLag&) { return std::string("random_uniform"); },
                        [](const RandomTau1Lag&) { return std::string("random_tau1"); },
                    },
                    kind);
}

std::optional<LagRegime> lag_regime(const LagSpec& spec) {
  return std::visit(overloaded{
                        [](const PowerLag& k) -> std::optional<LagRegime> {
                          // log(n^(1-rho)) / log log n -> infinity unless rho = 1.
                          return k.rho == 1.0 ? LagRegime::zero() : LagRegime::infinite();
                        },
                        [](const LogPowerLag& k) -> std::optional<LagRegime> {
                          return LagRegime::finite(k.s);
                        },
                        [](const FullLag&) -> std::optional<LagRegime> { return LagRegime::zero(); },
                        [](const RandomUniformLag&) -> std::optional<LagRegime> {
                          return std::nullopt;
                        },
                        [](const RandomTau1Lag&) -> std::optional<LagRegime> {
                          return std::nullopt;
                        },
                    },
                    spec.kind);
}

double lag_growth_bound(const LagSpec& spec) noexcept {
  if (const auto* u = std::get_if<RandomUniformLag>(&spec.kind)) return u->c;
  if (const auto* t = std::get_if<RandomTau1Lag>(&spec.kind)) return t->c;
  return 1.0;
}

std::int64_t lag(const LagSpec& spec, std::int64_t n, const Scheme* scheme, Rng* rng) {
  if (n < 1) throw std::domain_error("lag index must be >= 1");
  if (spec.random() && rng == nullptr) {
    throw ConfigError("lag", spec.name() + " lag needs a random stream");
  }
  if (spec.needs_scheme() && scheme == nullptr) {
    throw ConfigError("lag", spec.name() + " lag needs a sampling scheme");
  }
  const double x = static_cast<double>(n);
  return std::visit(
      overloaded{
          [&](const PowerLag& k) { return ceil_positive(std::pow(x, k.rho)); },
          [&](const LogPowerLag& k) {
            return ceil_positive(x * std::pow(std::log(x + std::numbers::e), -k.s));
          },
          [&](const FullLag&) { return n; },
          [&](const RandomUniformLag& k) {
            const auto m = static_cast<std::uint64_t>(ceil_positive(k.c * x));
            return static_cast<std::int64_t>(uniform_index(*rng, m));
          },
          [&](const RandomTau1Lag& k) {
            const double t1 = static_cast<double>(scheme->tau1(n));
            const auto m = static_cast<std::uint64_t>(ceil_positive(k.c * t1));
            return static_cast<std::int64_t>(uniform_index(*rng, m));
          },
      },
      spec.kind);
}

double s_n(std::int64_t n, std::int64_t a_n) {
  if (a_n < 1) throw std::domain_error("a_n must be >= 1");
  const double ll = log_log(n);
  return std::log(static_cast<double>(n) / static_cast<double>(a_n)) / ll;
}

double gamma_n(std::int64_t n, std::int64_t a_n) {
  if (a_n < 1) throw std::domain_error("a_n must be >= 1");
  const double ll = log_log(n);
  return std::log(static_cast<double>(n) / static_cast<double>(a_n)) + ll;
}

double gamma_star(std::int64_t n, std::int64_t a_n, const Scheme& scheme) {
  if (a_n < 1) throw std::domain_error("a_n must be >= 1");
  const double ll = log_log(n);
  const std::int64_t top = scheme.tau1(n);
  const std::int64_t bottom = scheme.tau1(a_n);
  if (bottom < 1 || top < 1) {
    throw std::domain_error("gamma_star needs tau1(a_n) >= 1; lag too small for the scheme");
  }
  return std::log(static_cast<double>(top) / static_cast<double>(bottom)) + ll;
}

GammaValues gamma_values(std::int64_t n, std::int64_t a_n, const Scheme* scheme) {
  GammaValues out{n, a_n, s_n(n, a_n), gamma_n(n, a_n), std::nullopt};
  if (scheme != nullptr && scheme->tau1(a_n) >= 1 && scheme->tau1(n) >= 1) {
    out.gamma_star = gamma_star(n, a_n, *scheme);
  }
  return out;
}

std::string to_string(Assumption which) {
  switch (which) {
    case Assumption::C1:
      return "C1";
    case Assumption::C2:
      return "C2";
    case Assumption::C1Star:
      return "C1*";
    case Assumption::C2Star:
      return "C2*";
  }
  return "?";
}

AssumptionReport check_lag_assumption(const LagSpec& spec, Assumption which,
                                      const Scheme* scheme, std::int64_t n_max,
                                      int replications, std::uint64_t seed) {
  spec.validate();
  const bool starred = which == Assumption::C1Star || which == Assumption::C2Star;
  const bool versus_tau1 = which == Assumption::C1 || which == Assumption::C1Star;
  if (starred != spec.random()) {
    throw ConfigError("assumption", to_string(which) + " does not apply to a " +
                                        (spec.random() ? "random" : "deterministic") + " lag");
  }
  if ((versus_tau1 || spec.needs_scheme()) && scheme == nullptr) {
    throw ConfigError("assumption", to_string(which) + " needs a sampling scheme");
  }
  if (n_max < kMinLogLogIndex) throw ConfigError("n_max", "must be >= 16");
  if (replications < 1) throw ConfigError("replications", "must be >= 1");

  AssumptionReport report{which};
  report.n_lo = kMinLogLogIndex;
  if (versus_tau1) {
    while (report.n_lo <= n_max && scheme->tau1(report.n_lo) < 1) ++report.n_lo;
    if (report.n_lo > n_max) throw ConfigError("n_max", "tau1 stays 0 over the whole range");
  }
  report.n_hi = n_max;
  report.replications = spec.random() ? replications : 1;

  const double mid = std::sqrt(static_cast<double>(report.n_lo) * static_cast<double>(n_max));
  for (int rep = 0; rep < report.replications; ++rep) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(rep), Stream::Lags));
    for (std::int64_t n = report.n_lo; n <= n_max; ++n) {
      const auto a = static_cast<double>(lag(spec, n, scheme, &rng));
      const auto denom = static_cast<double>(versus_tau1 ? scheme->tau1(n) : n);
      const double ratio = a / denom;
      if (ratio > report.sup_ratio) {
        report.sup_ratio = ratio;
        report.argsup = n;
      }
      auto& half = static_cast<double>(n) <= mid ? report.sup_lower_half : report.sup_upper_half;
      half = std::max(half, ratio);
    }
  }

  // Declared bounds: ceil adds at most 1 to c * denominator.
  const double slack = 1.0 / static_cast<double>(report.n_lo);
  if (!versus_tau1) {
    report.bound_declared = true;
    report.bound = spec.random() ? lag_growth_bound(spec) + slack : 1.0;
  } else if (const auto* t = std::get_if<RandomTau1Lag>(&spec.kind)) {
    report.bound_declared = true;
    report.bound = t->c + 1.0;
  } else {
    report.bound = 1.5 * report.sup_lower_half;
  }
  report.pass = report.sup_ratio <= report.bound;
  return report;
}

}  // namespace dsl
