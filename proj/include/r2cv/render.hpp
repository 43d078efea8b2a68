#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "r2cv/loocv.hpp"
#include "r2cv/scores.hpp"
#include "r2cv/validation.hpp"

namespace r2cv {

enum class OutputFormat { Text, Json, Csv };

/// Parses "text" | "json" | "csv"; throws InvalidSpec otherwise.
OutputFormat parse_format(std::string_view name);

/// One row of the naive-baseline curve.
struct CurvePoint {
  std::size_t n = 0;
  double r2_naive = 0.0;
};

/// Closed-form naive scores for every n in [n_min, n_max].
/// Throws SeriesTooShort when n_min < 2 or the range is empty.
std::vector<CurvePoint> naive_curve(std::size_t n_min, std::size_t n_max);

// Text output prints scores to 6 decimal places; json and csv carry full
// precision (17 significant digits, round-trip safe). Each renderer returns
// the complete output including the trailing newline.
std::string render_score_report(const ScoreReport& report, OutputFormat format);
std::string render_curve(const std::vector<CurvePoint>& curve, OutputFormat format);
std::string render_verification(const validation::VerificationReport& report,
                                OutputFormat format);

/// Per-fold predictions as CSV with columns held_out_index, y, yhat, loo_mean.
std::string render_fold_predictions_csv(const std::vector<FoldResult>& folds,
                                        const TargetSeries& targets);

}  // namespace r2cv
