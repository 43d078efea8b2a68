#include "r2cv/series.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "r2cv/errors.hpp"

namespace r2cv {
namespace {

void require_finite(const std::vector<double>& values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw NonFiniteInput(std::string(what) + ": non-finite value at index " +
                           std::to_string(i));
    }
  }
}

}  // namespace

TargetSeries::TargetSeries(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw SeriesTooShort("targets: need at least 2 values, got " +
                         std::to_string(values_.size()));
  }
  require_finite(values_, "targets");
}

PredictionSeries::PredictionSeries(std::vector<double> values)
    : values_(std::move(values)) {
  require_finite(values_, "predictions");
}

}  // namespace r2cv
