#include <cmath>
#include <stdexcept>
#include <random>

#include "doctest.h"
#include "dsl/errors.hpp"
#include "dsl/lags.hpp"

using namespace dsl;

TEST_CASE("deterministic lags") {
  CHECK(lag({FullLag{}}, 1'000'000) == 1'000'000);
  CHECK(lag({PowerLag{0.5}}, 10'000) == 100);
  CHECK(lag({PowerLag{0.5}}, 10'001) == 101);
  CHECK(lag({PowerLag{1.0}}, 77) == 77);
  const std::int64_t n = 1'000'000;
  const double expected = std::ceil(n * std::pow(std::log(n + std::exp(1.0)), -1.0));
  CHECK(lag({LogPowerLag{1.0}}, n) == static_cast<std::int64_t>(expected));
  CHECK(lag({LogPowerLag{5.0}}, 2) == 1);
}

TEST_CASE("lag spec validation and kind requirements") {
  CHECK_THROWS_AS((LagSpec{PowerLag{0.0}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((LagSpec{PowerLag{1.5}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((LagSpec{LogPowerLag{0.0}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((LagSpec{RandomUniformLag{-1.0}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((void)lag({RandomUniformLag{2.0}}, 10), ConfigError);
  Rng rng(1);
  CHECK_THROWS_AS((void)lag({RandomTau1Lag{1.0}}, 10, nullptr, &rng), ConfigError);
  CHECK(LagSpec{RandomTau1Lag{1.0}}.needs_scheme());
  CHECK(LagSpec{RandomUniformLag{1.0}}.random());
  CHECK_FALSE(LagSpec{FullLag{}}.random());
}

TEST_CASE("random uniform lag moments") {
  Rng rng(42);
  const LagSpec spec{RandomUniformLag{2.0}};
  const int draws = 10'000;
  double sum = 0.0;
  std::int64_t max = 0;
  std::int64_t min = 1 << 30;
  for (int i = 0; i < draws; ++i) {
    const auto a = lag(spec, 1000, nullptr, &rng);
    sum += static_cast<double>(a);
    max = std::max(max, a);
    min = std::min(min, a);
  }
  // Uniform on {1..2000}: mean 1000.5, sd sqrt((2000^2 - 1)/12).
  const double se = std::sqrt((2000.0 * 2000.0 - 1.0) / 12.0) / std::sqrt(draws);
  CHECK(max <= 2000);
  CHECK(min >= 1);
  CHECK(std::abs(sum / draws - 1000.5) <= 3.0 * se);
}

TEST_CASE("random tau1 lag stays within c tau1") {
  const Scheme s({0.8, 1.6, Composition{1.0}});
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto a = lag({RandomTau1Lag{1.5}}, 10'000, &s, &rng);
    REQUIRE(a >= 1);
    REQUIRE(a <= 150);
  }
}

TEST_CASE("lag regimes") {
  CHECK(lag_regime({FullLag{}})->kind == LagRegime::Kind::Zero);
  CHECK(lag_regime({PowerLag{1.0}})->kind == LagRegime::Kind::Zero);
  CHECK(lag_regime({PowerLag{0.5}})->kind == LagRegime::Kind::Infinite);
  const auto lp = lag_regime({LogPowerLag{1.5}});
  CHECK(lp->kind == LagRegime::Kind::Finite);
  CHECK(lp->s == 1.5);
  CHECK_FALSE(lag_regime({RandomUniformLag{1.0}}).has_value());
}

TEST_CASE("s_n") {
  CHECK(s_n(1000, 1000) == 0.0);
  CHECK_THROWS_AS((void)s_n(15, 15), std::domain_error);
  const std::int64_t n = 1'000'000;
  CHECK(std::abs(s_n(n, lag({LogPowerLag{2.0}}, n)) - 2.0) <= 0.1);
  const double sp = s_n(n, lag({PowerLag{0.5}}, n));
  CHECK(sp == doctest::Approx(0.5 * std::log(1e6) / std::log(std::log(1e6))).epsilon(1e-12));
  CHECK(sp == doctest::Approx(2.63).epsilon(0.01));
  CHECK(s_n(100'000'000, lag({PowerLag{0.5}}, 100'000'000)) > sp);
}

TEST_CASE("gamma_n") {
  CHECK(gamma_n(1618, 1618) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(gamma_n(1'000'000, 1000) == doctest::Approx(9.534).epsilon(1e-4));
  CHECK_THROWS_AS((void)gamma_n(10, 1), std::domain_error);
}

TEST_CASE("gamma_n = (1 + s_n) log log n on random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> nd(16, 1'000'000'000);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t n = nd(rng);
    std::uniform_int_distribution<std::int64_t> ad(1, n);
    const std::int64_t a = ad(rng);
    const double ll = std::log(std::log(static_cast<double>(n)));
    CHECK(gamma_n(n, a) == doctest::Approx((1.0 + s_n(n, a)) * ll).epsilon(1e-12));
  }
}

TEST_CASE("gamma_star") {
  const Scheme s({0.8, 1.6, Composition{1.0}});  // tau1 = floor(sqrt n)
  const double ll = std::log(std::log(1e6));
  CHECK(gamma_star(1'000'000, 1'000'000, s) == doctest::Approx(ll).epsilon(1e-15));
  CHECK(gamma_star(1'000'000, 10'000, s) == doctest::Approx(std::log(10.0) + ll).epsilon(1e-14));
  CHECK_THROWS_AS((void)gamma_star(100, 0, s), std::domain_error);
  for (std::int64_t a = 1; a <= 5000; a += 37) CHECK(gamma_star(5000, a, s) >= std::log(std::log(5000.0)));
  const auto v = gamma_values(1'000'000, 1000, &s);
  CHECK(v.gamma_star.has_value());
  CHECK(v.gamma_n == gamma_n(1'000'000, 1000));
  CHECK_FALSE(gamma_values(1'000'000, 1000, nullptr).gamma_star.has_value());
}

TEST_CASE("assumption checks") {
  const auto c2 = check_lag_assumption({FullLag{}}, Assumption::C2, nullptr, 100'000, 1);
  CHECK(c2.sup_ratio == 1.0);
  CHECK(c2.pass);

  const auto c2s =
      check_lag_assumption({RandomUniformLag{2.0}}, Assumption::C2Star, nullptr, 100'000, 100, 9);
  CHECK(c2s.sup_ratio <= 2.0 + 1.0 / 16.0);
  CHECK(c2s.pass);

  const Scheme s({0.8, 1.6, Composition{1.0}});
  const auto c1 = check_lag_assumption({FullLag{}}, Assumption::C1, &s, 100'000, 1);
  CHECK_FALSE(c1.pass);
  CHECK(c1.sup_ratio == doctest::Approx(std::sqrt(1e5)).epsilon(0.01));

  const auto c1ok = check_lag_assumption({PowerLag{0.5}}, Assumption::C1, &s, 100'000, 1);
  CHECK(c1ok.pass);

  CHECK_THROWS_AS((void)check_lag_assumption({FullLag{}}, Assumption::C2Star, nullptr, 1000, 1),
                  ConfigError);
  CHECK_THROWS_AS(
      (void)check_lag_assumption({RandomUniformLag{1.0}}, Assumption::C2, nullptr, 1000, 1),
      ConfigError);
  CHECK_THROWS_AS((void)check_lag_assumption({FullLag{}}, Assumption::C1, nullptr, 1000, 1),
                  ConfigError);
}

TEST_CASE("log-power lag: s_n near s at 10^6") {
  const std::int64_t n = 1'000'000;
  for (const double s : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(s_n(n, lag({LogPowerLag{s}}, n)) - s) <= 0.15);
  }
}
