#pragma once

#include <cstdint>
#include <optional>

namespace dsl {

/// One row of experiment output, taken at checkpoint n.
///
/// The engine fills the stream quantities (n through T); lil_stats fills the
/// normalizers, exponents and Chover statistics. Absent values stay nullopt
/// and are written as empty CSV fields.
struct CheckpointRecord {
  std::uint64_t rep = 0;
  std::int64_t n = 0;
  std::int64_t tau1 = 0;  // G1 draws counted by the stream through n
  std::int64_t tau2 = 0;
  double S = 0.0;  // U + V
  double U = 0.0;  // sum of the G1-indexed summands
  double V = 0.0;  // sum of the G2-indexed summands
  double max_abs_S = 0.0;  // max over k <= n of |S_k|
  std::int64_t a_n = 0;
  std::optional<double> T;  // S_{n+a_n} - S_n

  std::optional<double> B_n;
  std::optional<double> B_an;
  std::optional<double> s_n;
  std::optional<double> gamma_n;
  std::optional<double> gamma_star;
  std::optional<double> chover_loglog;
  std::optional<double> chover_gamma;
  std::optional<double> chover_gamma_star;
  std::optional<double> runmax_loglog;
  std::optional<double> runmax_gamma;
  std::optional<double> runmax_gamma_star;
};

}  // namespace dsl
