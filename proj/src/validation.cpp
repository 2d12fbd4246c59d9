#include "dsl/validation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsl {

double kolmogorov_survival(double x) noexcept {
  if (x <= 0.0) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_two_sample_pvalue(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("KS test needs two nonempty samples");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  const double en = std::sqrt(n * m / (n + m));
  return kolmogorov_survival((en + 0.12 + 0.11 / en) * d);
}

namespace {

std::vector<double> draw(const LawChoice& law, std::int64_t count, Rng& rng) {
  Sampler sampler(law);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (auto& x : out) x = sampler(rng);
  return out;
}

double fraction(std::span<const double> xs, auto pred) {
  return static_cast<double>(std::count_if(xs.begin(), xs.end(), pred)) /
         static_cast<double>(xs.size());
}

CheckResult within(std::string name, double observed, double expected, double tol) {
  return {std::move(name), observed, expected, tol, std::fabs(observed - expected) <= tol};
}

CheckResult sign_flip(std::span<const double> xs, const LawChoice& law, std::uint64_t seed) {
  // An independent sample, negated. Under symmetry both have the same law.
  Rng rng(splitmix64(seed ^ 0x5157A11ULL));
  auto ys = draw(law, static_cast<std::int64_t>(std::min<std::size_t>(xs.size(), 100000)), rng);
  for (auto& y : ys) y = -y;
  const auto head = xs.first(std::min<std::size_t>(xs.size(), 100000));
  const double p = ks_two_sample_pvalue(head, ys);
  return {"sign-flip KS p-value", p, 0.001, 0.0, p > 0.001};
}

}  // namespace

std::vector<CheckResult> run_validation_suite(const LawChoice& law, std::int64_t draws,
                                              std::uint64_t seed) {
  if (draws < 1000) throw std::invalid_argument("validation needs at least 1000 draws");
  Rng rng(seed);
  const auto xs = draw(law, draws, rng);
  const double root_n = std::sqrt(static_cast<double>(draws));
  std::vector<CheckResult> out;

  if (const auto* p = std::get_if<StableParams>(&law)) {
    for (double t : {0.5, 1.0, 2.0}) {
      out.push_back(within("empirical CF at t=" + std::to_string(t), empirical_cf(xs, t),
                           stable_cf(*p, t), 5.0 / root_n));
    }
    std::vector<double> sorted(xs);
    std::sort(sorted.begin(), sorted.end());
    const auto q = [&](double f) {
      return sorted[static_cast<std::size_t>(f * static_cast<double>(sorted.size() - 1))];
    };
    const double iqr = q(0.75) - q(0.25);
    out.push_back(within("median", q(0.5), 0.0, 3.0 * iqr / root_n));
    if (p->alpha() == 1.0) {
      const double at_scale = fraction(xs, [&](double x) { return x <= p->scale(); });
      out.push_back(within("Cauchy P(X <= scale)", at_scale, 0.75, 2.0 / root_n));
    }
    out.push_back(sign_flip(xs, law, seed));
  } else if (const auto* s = std::get_if<ParetoTailSpec>(&law)) {
    const double n = static_cast<double>(draws);
    for (double k : {1.0, 2.0, 10.0, 100.0}) {
      const double x = k * s->cutoff();
      const double expected = pareto_survival(*s, x);
      const double sigma = std::sqrt(expected * (1.0 - expected) / n);
      out.push_back(within("P(X > " + std::to_string(x) + ")",
                           fraction(xs, [&](double v) { return v > x; }), expected,
                           3.0 * sigma + 1.0 / n));
      const double lower = pareto_cdf(*s, -x);
      const double sigma_lo = std::sqrt(lower * (1.0 - lower) / n);
      out.push_back(within("P(X < -" + std::to_string(x) + ")",
                           fraction(xs, [&](double v) { return v < -x; }), lower,
                           3.0 * sigma_lo + 1.0 / n));
    }
    const double body = 1.0 - s->lower_mass() - s->upper_mass();
    out.push_back(within("P(|X| < cutoff)",
                         fraction(xs, [&](double v) { return std::fabs(v) < s->cutoff(); }),
                         body, 3.0 * std::sqrt(body * (1.0 - body) / n) + 1.0 / n));
    if (s->symmetric()) out.push_back(sign_flip(xs, law, seed));
  } else {
    out.push_back(within("all draws zero",
                         fraction(xs, [](double v) { return v == 0.0; }), 1.0, 0.0));
  }
  return out;
}

}  // namespace dsl
