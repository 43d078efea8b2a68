#include "r2cv/scores.hpp"

#include <cstddef>
#include <span>
#include <string>

#include "compensated_sum.hpp"
#include "r2cv/errors.hpp"

namespace r2cv {
namespace {

void require_same_length(const TargetSeries& targets,
                         const PredictionSeries& predictions) {
  if (targets.size() != predictions.size()) {
    throw LengthMismatch("targets have " + std::to_string(targets.size()) +
                         " values but predictions have " +
                         std::to_string(predictions.size()));
  }
}

bool all_equal(std::span<const double> values) {
  for (double v : values) {
    if (v != values.front()) return false;
  }
  return true;
}

// The score denominators vanish exactly when every target is equal; testing
// the values directly catches constant data whose floating-point variance
// does not cancel to zero (e.g. repeated 0.1).
void require_variance(const TargetSeries& targets) {
  if (all_equal(targets.values())) {
    throw ZeroVarianceTargets("all targets are equal; the score is undefined");
  }
}

double plain_mean(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double sum_sq_dev(std::span<const double> values, double center) {
  double sum = 0.0;
  for (double v : values) {
    const double d = v - center;
    sum += d * d;
  }
  return sum;
}

double sum_sq_diff(std::span<const double> lhs, std::span<const double> rhs) {
  double sum = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const double d = lhs[i] - rhs[i];
    sum += d * d;
  }
  return sum;
}

}  // namespace

LooMeanSeries loo_means(const TargetSeries& targets) {
  const auto y = targets.values();
  const std::size_t n = y.size();
  double total = 0.0;
  for (double v : y) total += v;

  LooMeanSeries out;
  out.values.resize(n);
  const double divisor = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = (total - y[i]) / divisor;
  }
  return out;
}

double r2_standard(const TargetSeries& targets,
                   const PredictionSeries& predictions) {
  require_same_length(targets, predictions);
  require_variance(targets);
  const auto y = targets.values();
  const double b = sum_sq_dev(y, plain_mean(y));
  if (b == 0.0) {
    throw ZeroVarianceTargets("target variance underflowed to zero");
  }
  const double a = sum_sq_diff(y, predictions.values());
  return 1.0 - a / b;
}

double r2_cv_direct(const TargetSeries& targets,
                    const PredictionSeries& predictions) {
  require_same_length(targets, predictions);
  require_variance(targets);
  const auto y = targets.values();
  const LooMeanSeries loo = loo_means(targets);
  const double c = sum_sq_diff(y, loo.values);
  if (c == 0.0) {
    throw ZeroVarianceTargets("target variance underflowed to zero");
  }
  const double a = sum_sq_diff(y, predictions.values());
  return 1.0 - a / c;
}

double r2_naive_closed_form(std::size_t n) {
  if (n < 2) {
    throw SeriesTooShort("closed-form naive score needs n >= 2, got " +
                         std::to_string(n));
  }
  const double ratio = static_cast<double>(n) / static_cast<double>(n - 1);
  return 1.0 - ratio * ratio;
}

double r2_naive_empirical(const TargetSeries& targets) {
  require_variance(targets);
  const auto y = targets.values();
  const double b = sum_sq_dev(y, plain_mean(y));
  if (b == 0.0) {
    throw ZeroVarianceTargets("target variance underflowed to zero");
  }
  const LooMeanSeries loo = loo_means(targets);
  const double c = sum_sq_diff(y, loo.values);
  return 1.0 - c / b;
}

double adjust_r2(double r2, std::size_t n) {
  const double naive = r2_naive_closed_form(n);
  return (r2 - naive) / (1.0 - naive);
}

DecompositionTerms decomposition_terms(const TargetSeries& targets,
                                       const PredictionSeries& predictions) {
  require_same_length(targets, predictions);
  const auto y = targets.values();
  const auto p = predictions.values();
  const std::size_t n = y.size();

  detail::CompensatedSum total;
  for (double v : y) total.add(v);
  const double grand_sum = total.value();
  const double mean = grand_sum / static_cast<double>(n);
  const double divisor = static_cast<double>(n - 1);

  detail::CompensatedSum a, b, c;
  for (std::size_t i = 0; i < n; ++i) {
    const double res = y[i] - p[i];
    a.add(res * res);
    const double dev = y[i] - mean;
    b.add(dev * dev);
    const double loo_dev = y[i] - (grand_sum - y[i]) / divisor;
    c.add(loo_dev * loo_dev);
  }

  const double ratio = static_cast<double>(n) / divisor;
  return DecompositionTerms{a.value(), b.value(), c.value(), ratio * ratio};
}

ScoreReport compute_scores(const TargetSeries& targets,
                           const PredictionSeries& predictions) {
  ScoreReport report;
  report.n = targets.size();
  report.r2_standard = r2_standard(targets, predictions);
  report.r2_cv_direct = r2_cv_direct(targets, predictions);
  report.r2_cv_adjusted = adjust_r2(report.r2_standard, report.n);
  report.r2_naive_closed = r2_naive_closed_form(report.n);
  report.r2_naive_empirical = r2_naive_empirical(targets);
  return report;
}

}  // namespace r2cv
