#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace r2cv {

/// Ordered observed target values y_1..y_n. Construction validates that
/// n >= 2 and that every value is finite.
class TargetSeries {
 public:
  explicit TargetSeries(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

 private:
  std::vector<double> values_;
};

/// Predictions aligned with a TargetSeries. Finiteness is validated here;
/// the pairing length is checked by the operations that consume both.
class PredictionSeries {
 public:
  explicit PredictionSeries(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

 private:
  std::vector<double> values_;
};

}  // namespace r2cv
