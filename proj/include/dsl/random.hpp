#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace dsl {

/// The one engine used throughout. std::mt19937_64 is fully specified by the
/// standard, so a given seed yields the same stream on every conforming
/// implementation. The std:: distributions are not, which is why the
/// conversions below are written out.
using Rng = std::mt19937_64;

/// Independent streams carved from one base seed.
enum class Stream : std::uint64_t { Summands = 0, Lags = 1 };

constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of replication `rep` on `stream`:
///   splitmix64(splitmix64(base ^ tag(stream)) + (rep + 1) * 0x9E3779B97F4A7C15)
/// with tag(Summands) = 0 and tag(Lags) = 0xD1B54A32D192ED03.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t rep,
                                    Stream stream) noexcept {
  const std::uint64_t tag =
      stream == Stream::Lags ? 0xD1B54A32D192ED03ULL : 0ULL;
  return splitmix64(splitmix64(base ^ tag) + (rep + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Uniform on the open interval (0, 1), 53 random bits.
inline double uniform_open(Rng& rng) noexcept {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

/// Uniform on {1, ..., m}. Rejection keeps it exactly uniform.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t m) noexcept {
  if (m <= 1) return 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % m;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % m + 1;
}

}  // namespace dsl
