#pragma once

#include <cmath>

namespace r2cv::detail {

/// Neumaier-compensated accumulator. The running compensation also catches
/// the case where the addend dominates the partial sum.
struct CompensatedSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double x) noexcept {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      compensation += (sum - t) + x;
    } else {
      compensation += (x - t) + sum;
    }
    sum = t;
  }

  double value() const noexcept { return sum + compensation; }
};

}  // namespace r2cv::detail
