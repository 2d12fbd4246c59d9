#include "dsl/lil_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsl {

std::string Regime::name() const {
  if (collapsed()) return "single_law";
  switch (kind) {
    case LimitKind::Composition:
      return "composition";
    case LimitKind::StableAlpha1:
      return "stable_alpha1";
    case LimitKind::StableAlpha2:
      return "stable_alpha2";
  }
  return "?";
}

Regime classify_regime(const RegimeSpec& spec) noexcept {
  LimitKind kind = LimitKind::StableAlpha2;
  if (std::holds_alternative<Composition>(spec.kind)) kind = LimitKind::Composition;
  if (std::holds_alternative<StableAlpha1>(spec.kind)) kind = LimitKind::StableAlpha1;
  return {kind, spec.alpha1, spec.alpha2};
}

double normalizer(const Regime& regime, const Scheme& scheme, std::int64_t n) {
  if (n < 1) throw std::domain_error("normalizer needs n >= 1");
  if (regime.collapsed()) return std::pow(static_cast<double>(n), 1.0 / regime.alpha1);
  switch (regime.kind) {
    case LimitKind::Composition:
      return std::pow(static_cast<double>(n), 1.0 / regime.alpha2);
    case LimitKind::StableAlpha1: {
      const std::int64_t t1 = scheme.tau1(n);
      if (t1 < 1) throw std::domain_error("normalizer: tau1(n) = 0");
      return std::pow(static_cast<double>(t1), 1.0 / regime.alpha1);
    }
    case LimitKind::StableAlpha2: {
      const std::int64_t t2 = scheme.tau2(n);
      if (t2 < 1) throw std::domain_error("normalizer: tau2(n) = 0");
      return std::pow(static_cast<double>(t2), 1.0 / regime.alpha2);
    }
  }
  return 0.0;
}

std::string normalizer_formula(const Regime& regime) {
  if (regime.collapsed()) return "n^(1/alpha)";
  switch (regime.kind) {
    case LimitKind::Composition:
      return "n^(1/alpha2)";
    case LimitKind::StableAlpha1:
      return "tau1(n)^(1/alpha1)";
    case LimitKind::StableAlpha2:
      return "tau2(n)^(1/alpha2)";
  }
  return "?";
}

double chover_stat(double T, double B, double exponent) {
  if (!(B > 0.0)) throw std::domain_error("chover_stat needs B > 0");
  if (!(exponent > 0.0)) throw std::domain_error("chover_stat needs a positive exponent");
  if (T == 0.0) return 0.0;
  return std::pow(std::fabs(T / B), 1.0 / exponent);
}

double predicted_limit(const Regime& regime, const LagRegime& lag_regime) noexcept {
  const double a1 = regime.alpha1;
  const double a2 = regime.alpha2;
  if (regime.collapsed()) return std::exp(1.0 / a1);
  switch (regime.kind) {
    case LimitKind::StableAlpha1:
      return std::exp(1.0 / a1);
    case LimitKind::StableAlpha2:
      return std::exp(1.0 / a2);
    case LimitKind::Composition:
      break;
  }
  switch (lag_regime.kind) {
    case LagRegime::Kind::Zero:
      return std::exp(1.0 / a1);
    case LagRegime::Kind::Infinite:
      return std::exp(1.0 / a2);
    case LagRegime::Kind::Finite: {
      const double s = lag_regime.s;
      return std::exp((a1 * s + a2) / ((s + 1.0) * a1 * a2));
    }
  }
  return 0.0;
}

double loglog_limit(const Regime& regime) noexcept {
  if (regime.kind == LimitKind::StableAlpha2) return std::exp(1.0 / regime.alpha2);
  return std::exp(1.0 / regime.alpha1);
}

std::string branch_name(const Regime& regime, const std::optional<LagRegime>& lag_regime) {
  if (regime.collapsed()) return "single-law";
  switch (regime.kind) {
    case LimitKind::StableAlpha1:
      return "stable-alpha1/gamma-star";
    case LimitKind::StableAlpha2:
      return "stable-alpha2/gamma";
    case LimitKind::Composition:
      break;
  }
  if (!lag_regime) return "composition/s-undetermined";
  switch (lag_regime->kind) {
    case LagRegime::Kind::Zero:
      return "composition/s-zero";
    case LagRegime::Kind::Infinite:
      return "composition/s-infinite";
    case LagRegime::Kind::Finite:
      return "composition/s-finite";
  }
  return "?";
}

std::string to_string(ChoverExponent e) {
  switch (e) {
    case ChoverExponent::LogLog:
      return "loglog";
    case ChoverExponent::Gamma:
      return "gamma";
    case ChoverExponent::GammaStar:
      return "gamma_star";
  }
  return "?";
}

std::optional<double> predicted_for(const Regime& regime, ChoverExponent which,
                                    const std::optional<LagRegime>& lag_regime) {
  switch (which) {
    case ChoverExponent::LogLog:
      return loglog_limit(regime);
    case ChoverExponent::Gamma:
      if (regime.collapsed() || regime.kind == LimitKind::StableAlpha2) {
        return predicted_limit(regime, LagRegime::zero());
      }
      if (regime.kind == LimitKind::Composition && lag_regime) {
        return predicted_limit(regime, *lag_regime);
      }
      return std::nullopt;
    case ChoverExponent::GammaStar:
      if (!regime.collapsed() && regime.kind == LimitKind::StableAlpha1) {
        return predicted_limit(regime, LagRegime::zero());
      }
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::optional<double>> running_max(std::span<const std::optional<double>> values) {
  std::vector<std::optional<double>> out;
  out.reserve(values.size());
  std::optional<double> best;
  for (const auto& v : values) {
    if (v && (!best || *v > *best)) best = v;
    out.push_back(best);
  }
  return out;
}

ChoverSeries running_max(ChoverSeries series) {
  series.running = running_max(series.values);
  return series;
}

ChoverSeries chover_series(std::span<const CheckpointRecord> records, ChoverExponent which) {
  ChoverSeries out{which, {}, {}};
  out.values.reserve(records.size());
  for (const auto& r : records) {
    switch (which) {
      case ChoverExponent::LogLog:
        out.values.push_back(r.chover_loglog);
        break;
      case ChoverExponent::Gamma:
        out.values.push_back(r.chover_gamma);
        break;
      case ChoverExponent::GammaStar:
        out.values.push_back(r.chover_gamma_star);
        break;
    }
  }
  return running_max(std::move(out));
}

std::vector<std::optional<double>> dichotomy_series(std::span<const CheckpointRecord> records,
                                                    const TestFn& f, AlphaSlot slot, double delta,
                                                    const Regime& regime, SeriesSource source) {
  if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
  const double alpha = slot == AlphaSlot::Alpha1 ? regime.alpha1 : regime.alpha2;
  const double power = (1.0 + delta) / alpha;
  std::vector<std::optional<double>> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    const std::optional<double> x = source == SeriesSource::PartialSum ? std::optional(r.S) : r.T;
    if (!x || !r.B_n) {
      out.emplace_back();
      continue;
    }
    const double fn = f(static_cast<double>(r.n));
    out.emplace_back(std::fabs(*x) / (*r.B_n * std::pow(fn, power)));
  }
  return out;
}

std::vector<double> max_partial_sum_series(std::span<const CheckpointRecord> records,
                                           const TestFn& f, double alpha) {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    const double n = static_cast<double>(r.n);
    out.push_back(r.max_abs_S / std::pow(n * f(n), 1.0 / alpha));
  }
  return out;
}

namespace {

template <class F>
std::optional<double> attempt(F&& f) {
  try {
    return f();
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

std::optional<double> stat_or_absent(const std::optional<double>& T, const std::optional<double>& B,
                                     const std::optional<double>& exponent) {
  if (!T || !B || !exponent || !(*exponent > 0.0)) return std::nullopt;
  return chover_stat(*T, *B, *exponent);
}

}  // namespace

void annotate(std::vector<CheckpointRecord>& records, const Regime& regime, const Scheme& scheme) {
  std::optional<double> best_loglog;
  std::optional<double> best_gamma;
  std::optional<double> best_gamma_star;
  const auto bump = [](std::optional<double>& best, const std::optional<double>& v) {
    if (v && (!best || *v > *best)) best = v;
    return best;
  };
  for (auto& r : records) {
    r.B_n = attempt([&] { return normalizer(regime, scheme, r.n); });
    r.B_an = attempt([&] { return normalizer(regime, scheme, r.a_n); });
    r.s_n = attempt([&] { return s_n(r.n, r.a_n); });
    r.gamma_n = attempt([&] { return gamma_n(r.n, r.a_n); });
    r.gamma_star = attempt([&] { return gamma_star(r.n, r.a_n, scheme); });
    const auto loglog = attempt([&] { return std::log(std::log(static_cast<double>(r.n))); });
    r.chover_loglog = stat_or_absent(r.T, r.B_n, loglog);
    r.chover_gamma = stat_or_absent(r.T, r.B_an, r.gamma_n);
    r.chover_gamma_star = stat_or_absent(r.T, r.B_an, r.gamma_star);
    r.runmax_loglog = bump(best_loglog, r.chover_loglog);
    r.runmax_gamma = bump(best_gamma, r.chover_gamma);
    r.runmax_gamma_star = bump(best_gamma_star, r.chover_gamma_star);
  }
}

}  // namespace dsl
