#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dsl/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Delayed sums under a two-law sampling scheme"};
  app.require_subcommand(1);

  std::string config;
  std::string out_dir = "out";
  int threads = 1;
  bool quiet = false;

  auto* run = app.add_subcommand("run", "simulate and write records.csv, summary.json, manifest.json");
  run->add_option("--config", config, "config or manifest JSON")->required();
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  run->add_flag("--quiet", quiet, "no progress output");

  auto* limits = app.add_subcommand("limits", "print regime, normalizer and predicted limits");
  limits->add_option("--config", config, "config JSON")->required();

  std::string fn_spec;
  int K = 200;
  int window = 50;
  auto* classify = app.add_subcommand("classify", "integral test for 1/(x f(x))");
  classify->add_option("fn", fn_spec, "logpow:ETA | composite:ETA,THETA | table:X=F,...")
      ->required();
  classify->add_option("-K", K, "dyadic terms");
  classify->add_option("--window", window, "tail window for the slope fit");

  std::int64_t scheme_n_max = 0;
  double ratio = 1.1;
  auto* scheme = app.add_subcommand("scheme", "dump n,tau1,tau2,regime_ratio as CSV");
  scheme->add_option("--config", config, "config JSON")->required();
  scheme->add_option("--n-max", scheme_n_max, "grid end (default: config n_max)");
  scheme->add_option("--ratio", ratio, "grid ratio");

  std::string law_spec;
  std::int64_t draws = 1'000'000;
  std::uint64_t seed = 20240601;
  auto* validate = app.add_subcommand("validate", "goodness-of-fit checks for a law");
  validate->add_option("law", law_spec, "stable:alpha=A,scale=L | pareto:alpha=..,c_plus=..,c_minus=..,cutoff=..")
      ->required();
  validate->add_option("-N", draws, "number of draws");
  validate->add_option("--seed", seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dsl::exit_code::kInvalid;
  }

  if (*run) return dsl::cmd_run({config, out_dir, threads, quiet}, std::cout, std::cerr);
  if (*limits) return dsl::cmd_limits(config, std::cout, std::cerr);
  if (*classify) return dsl::cmd_classify(fn_spec, K, window, std::cout, std::cerr);
  if (*scheme) return dsl::cmd_scheme(config, scheme_n_max, ratio, std::cout, std::cerr);
  return dsl::cmd_validate(law_spec, draws, seed, std::cout, std::cerr);
}
