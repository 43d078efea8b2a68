#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "r2cv/scores.hpp"
#include "r2cv/series.hpp"

namespace r2cv {

/// Dense row-major matrix of feature values. cols may be zero.
struct Matrix {
  std::vector<double> data;
  std::size_t rows = 0;
  std::size_t cols = 0;

  /// Builds from nested rows; throws LengthMismatch on ragged input.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  double operator()(std::size_t r, std::size_t c) const noexcept {
    return data[r * cols + c];
  }
  std::span<const double> row(std::size_t r) const noexcept {
    return {data.data() + r * cols, cols};
  }
};

/// Feature rows paired with targets; the unit of one LOOCV run.
class SupervisedDataset {
 public:
  SupervisedDataset(Matrix features, TargetSeries targets);

  const Matrix& features() const noexcept { return features_; }
  const TargetSeries& targets() const noexcept { return targets_; }
  std::size_t size() const noexcept { return targets_.size(); }
  std::size_t dim() const noexcept { return features_.cols; }

 private:
  Matrix features_;
  TargetSeries targets_;
};

enum class PredictorKind { Mean, Linear, Knn };

/// Parses "mean" | "linear" | "knn"; throws InvalidSpec otherwise.
PredictorKind parse_predictor_kind(std::string_view name);

/// Declarative predictor choice. k applies to knn only, ridge to linear only.
struct PredictorSpec {
  PredictorKind kind = PredictorKind::Mean;
  std::size_t k = 3;
  double ridge = 0.0;
};

/// One fold: the model fitted on all rows except held_out_index predicted
/// that row. training_mean is the fold's constant-baseline prediction.
struct FoldResult {
  std::size_t held_out_index = 0;
  double prediction = 0.0;
  double training_mean = 0.0;
};

/// Arithmetic mean of the training targets.
double fit_predict_mean(std::span<const double> train_targets);

/// Ordinary least squares with an intercept via the normal equations;
/// ridge is added to the feature block of the Gram matrix (the intercept
/// stays unpenalized). With zero feature columns this is the intercept-only
/// model, i.e. the training mean. Throws SingularFit rather than falling
/// back to a pseudo-inverse.
double fit_predict_linear(const Matrix& train_features,
                          std::span<const double> train_targets,
                          std::span<const double> test_row, double ridge);

/// Mean target of the k training rows nearest in Euclidean distance.
/// Distance ties break toward the lower row index.
double fit_predict_knn(const Matrix& train_features,
                       std::span<const double> train_targets,
                       std::span<const double> test_row, std::size_t k);

/// Runs every fold and returns the per-fold records in held-out order.
std::vector<FoldResult> loocv_folds(const SupervisedDataset& data,
                                    const PredictorSpec& spec);

/// Predictions aligned with the targets, one per held-out row.
PredictionSeries run_loocv(const SupervisedDataset& data,
                           const PredictorSpec& spec);

/// run_loocv followed by the full score computation.
ScoreReport score_loocv(const SupervisedDataset& data,
                        const PredictorSpec& spec);

}  // namespace r2cv
