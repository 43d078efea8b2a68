#pragma once

#include <cstddef>
#include <vector>

#include "r2cv/series.hpp"

namespace r2cv {

/// Leave-one-out means: values[i] is the mean of all targets except y_i.
struct LooMeanSeries {
  std::vector<double> values;
};

/// Sums-of-squares decomposition behind the adjustment identity:
///   a = sum (y_i - yhat_i)^2      residual sum
///   b = sum (y_i - ybar)^2        total sum about the global mean
///   c = sum (y_i - ybar_i)^2      total sum about the leave-one-out means
///   alpha = n^2 / (n - 1)^2       so that c = alpha * b
struct DecompositionTerms {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double alpha = 0.0;
};

/// Every score computed for one (targets, predictions) evaluation.
struct ScoreReport {
  double r2_standard = 0.0;
  double r2_cv_direct = 0.0;
  double r2_cv_adjusted = 0.0;
  double r2_naive_closed = 0.0;
  double r2_naive_empirical = 0.0;
  std::size_t n = 0;

  bool operator==(const ScoreReport&) const = default;
};

/// LOO means through the total-sum identity (sum - y_i) / (n - 1).
/// One pass, O(n).
LooMeanSeries loo_means(const TargetSeries& targets);

/// Standard score 1 - A/B. Throws ZeroVarianceTargets when all targets
/// are equal (B = 0).
double r2_standard(const TargetSeries& targets,
                   const PredictionSeries& predictions);

/// Cross-validated score 1 - A/C, where C sums squared deviations from the
/// leave-one-out means. The constant LOO baseline scores exactly zero here.
double r2_cv_direct(const TargetSeries& targets,
                    const PredictionSeries& predictions);

/// Closed-form standard score of the constant LOO baseline:
/// 1 - (n/(n-1))^2. Strictly negative and increasing in n.
double r2_naive_closed_form(std::size_t n);

/// Empirical baseline score 1 - C/B. Depends only on n, not on the data;
/// matches r2_naive_closed_form(n) for any targets with B > 0.
double r2_naive_empirical(const TargetSeries& targets);

/// Maps a standard score onto the cross-validated scale:
/// (r2 - naive) / (1 - naive) with naive = r2_naive_closed_form(n).
double adjust_r2(double r2, std::size_t n);

/// A, B, C and alpha by direct compensated summation. More accurate than
/// the plain score paths; the verification checks lean on this.
DecompositionTerms decomposition_terms(const TargetSeries& targets,
                                       const PredictionSeries& predictions);

/// All scores for one evaluation.
ScoreReport compute_scores(const TargetSeries& targets,
                           const PredictionSeries& predictions);

}  // namespace r2cv
