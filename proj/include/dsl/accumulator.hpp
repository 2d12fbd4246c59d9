#pragma once

#include <cmath>

namespace dsl {

// Neumaier's variant of Kahan summation. Handles terms larger than the
// running sum, which is the common case with heavy tails.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }
  [[nodiscard]] bool finite() const noexcept {
    return std::isfinite(sum_) && std::isfinite(comp_);
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace dsl
