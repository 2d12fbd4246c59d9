#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dsl {

/// Invalid or inconsistent experiment configuration. `field` names the
/// offending entry (dotted path for nested config objects).
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A running sum left the finite doubles. `index` is the first summand index
/// at which that was observed.
class NumericAbort : public std::runtime_error {
 public:
  NumericAbort(std::int64_t index, std::uint64_t replication)
      : std::runtime_error("non-finite accumulation at index " + std::to_string(index) +
                           " (replication " + std::to_string(replication) + ")"),
        index_(index),
        replication_(replication) {}

  [[nodiscard]] std::int64_t index() const noexcept { return index_; }
  [[nodiscard]] std::uint64_t replication() const noexcept { return replication_; }

 private:
  std::int64_t index_;
  std::uint64_t replication_;
};

}  // namespace dsl
