#include "r2cv/loocv.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "r2cv/errors.hpp"

namespace r2cv {
namespace {

// A Cholesky pivot collapsing below this fraction of its original diagonal
// entry marks the normal system as rank-deficient.
constexpr double kSingularPivotRelTol = 1e-12;

void validate_spec(const PredictorSpec& spec, std::size_t n) {
  switch (spec.kind) {
    case PredictorKind::Mean:
      return;
    case PredictorKind::Linear:
      if (!(spec.ridge >= 0.0) || !std::isfinite(spec.ridge)) {
        throw InvalidSpec("ridge must be a finite value >= 0");
      }
      return;
    case PredictorKind::Knn:
      if (spec.k < 1 || spec.k + 1 > n) {
        throw InvalidSpec("knn needs 1 <= k <= n - 1; got k = " +
                          std::to_string(spec.k) + " with n = " +
                          std::to_string(n));
      }
      return;
  }
  throw InvalidSpec("unknown predictor kind");
}

// Cholesky solve of the symmetric positive semidefinite normal system,
// in place on flat storage. Throws SingularFit when a pivot vanishes.
std::vector<double> solve_normal_system(std::vector<double> gram,
                                        std::vector<double> rhs,
                                        std::size_t m) {
  std::vector<double> scale(m);
  for (std::size_t i = 0; i < m; ++i) scale[i] = gram[i * m + i];

  for (std::size_t j = 0; j < m; ++j) {
    double pivot = gram[j * m + j];
    for (std::size_t k = 0; k < j; ++k) {
      pivot -= gram[j * m + k] * gram[j * m + k];
    }
    if (!(pivot > kSingularPivotRelTol * scale[j])) {
      throw SingularFit("normal equations are singular (rank-deficient "
                        "features); add ridge regularization");
    }
    const double root = std::sqrt(pivot);
    gram[j * m + j] = root;
    for (std::size_t i = j + 1; i < m; ++i) {
      double v = gram[i * m + j];
      for (std::size_t k = 0; k < j; ++k) {
        v -= gram[i * m + k] * gram[j * m + k];
      }
      gram[i * m + j] = v / root;
    }
  }

  // forward then backward substitution
  for (std::size_t i = 0; i < m; ++i) {
    double v = rhs[i];
    for (std::size_t k = 0; k < i; ++k) v -= gram[i * m + k] * rhs[k];
    rhs[i] = v / gram[i * m + i];
  }
  for (std::size_t i = m; i-- > 0;) {
    double v = rhs[i];
    for (std::size_t k = i + 1; k < m; ++k) v -= gram[k * m + i] * rhs[k];
    rhs[i] = v / gram[i * m + i];
  }
  return rhs;
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m;
  if (rows.empty()) return m;
  m.rows = rows.size();
  m.cols = rows.front().size();
  m.data.reserve(m.rows * m.cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols) {
      throw LengthMismatch("feature row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) +
                           " values, expected " + std::to_string(m.cols));
    }
    m.data.insert(m.data.end(), rows[r].begin(), rows[r].end());
  }
  return m;
}

SupervisedDataset::SupervisedDataset(Matrix features, TargetSeries targets)
    : features_(std::move(features)), targets_(std::move(targets)) {
  if (features_.rows != targets_.size()) {
    throw LengthMismatch("dataset has " + std::to_string(features_.rows) +
                         " feature rows but " +
                         std::to_string(targets_.size()) + " targets");
  }
  if (features_.data.size() != features_.rows * features_.cols) {
    throw LengthMismatch("feature storage does not match rows x cols");
  }
  for (double v : features_.data) {
    if (!std::isfinite(v)) {
      throw NonFiniteInput("features: non-finite value");
    }
  }
}

PredictorKind parse_predictor_kind(std::string_view name) {
  if (name == "mean") return PredictorKind::Mean;
  if (name == "linear") return PredictorKind::Linear;
  if (name == "knn") return PredictorKind::Knn;
  throw InvalidSpec("unknown predictor '" + std::string(name) +
                    "' (expected mean, linear or knn)");
}

double fit_predict_mean(std::span<const double> train_targets) {
  if (train_targets.empty()) {
    throw EmptyTrainingSet("mean predictor needs at least one training target");
  }
  double sum = 0.0;
  for (double v : train_targets) sum += v;
  return sum / static_cast<double>(train_targets.size());
}

double fit_predict_linear(const Matrix& train_features,
                          std::span<const double> train_targets,
                          std::span<const double> test_row, double ridge) {
  if (train_features.rows == 0) {
    throw EmptyTrainingSet("linear predictor needs at least one training row");
  }
  if (train_features.rows != train_targets.size()) {
    throw LengthMismatch("training features and targets differ in length");
  }
  if (test_row.size() != train_features.cols) {
    throw LengthMismatch("test row has " + std::to_string(test_row.size()) +
                         " features, expected " +
                         std::to_string(train_features.cols));
  }
  if (!(ridge >= 0.0) || !std::isfinite(ridge)) {
    throw InvalidSpec("ridge must be a finite value >= 0");
  }

  const std::size_t d = train_features.cols;
  if (d == 0) return fit_predict_mean(train_targets);  // intercept-only model

  // Normal equations on the augmented design [X 1].
  const std::size_t m = d + 1;
  std::vector<double> gram(m * m, 0.0);
  std::vector<double> rhs(m, 0.0);
  for (std::size_t r = 0; r < train_features.rows; ++r) {
    const auto row = train_features.row(r);
    for (std::size_t i = 0; i < m; ++i) {
      const double zi = i < d ? row[i] : 1.0;
      for (std::size_t j = 0; j <= i; ++j) {
        const double zj = j < d ? row[j] : 1.0;
        gram[i * m + j] += zi * zj;
      }
      rhs[i] += zi * train_targets[r];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) gram[i * m + j] = gram[j * m + i];
  }
  for (std::size_t j = 0; j < d; ++j) gram[j * m + j] += ridge;

  const std::vector<double> coef = solve_normal_system(std::move(gram),
                                                       std::move(rhs), m);
  double prediction = coef[d];
  for (std::size_t j = 0; j < d; ++j) prediction += coef[j] * test_row[j];
  return prediction;
}

double fit_predict_knn(const Matrix& train_features,
                       std::span<const double> train_targets,
                       std::span<const double> test_row, std::size_t k) {
  if (train_features.rows == 0) {
    throw EmptyTrainingSet("knn predictor needs at least one training row");
  }
  if (train_features.rows != train_targets.size()) {
    throw LengthMismatch("training features and targets differ in length");
  }
  if (test_row.size() != train_features.cols) {
    throw LengthMismatch("test row has " + std::to_string(test_row.size()) +
                         " features, expected " +
                         std::to_string(train_features.cols));
  }
  if (k < 1 || k > train_features.rows) {
    throw InvalidSpec("knn needs 1 <= k <= training rows; got k = " +
                      std::to_string(k));
  }

  // (squared distance, row index); lexicographic order breaks ties toward
  // the lower index.
  std::vector<std::pair<double, std::size_t>> order(train_features.rows);
  for (std::size_t r = 0; r < train_features.rows; ++r) {
    const auto row = train_features.row(r);
    double d2 = 0.0;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const double diff = row[c] - test_row[c];
      d2 += diff * diff;
    }
    order[r] = {d2, r};
  }
  std::partial_sort(order.begin(), order.begin() + static_cast<long>(k),
                    order.end());

  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += train_targets[order[i].second];
  return sum / static_cast<double>(k);
}

std::vector<FoldResult> loocv_folds(const SupervisedDataset& data,
                                    const PredictorSpec& spec) {
  const std::size_t n = data.size();
  validate_spec(spec, n);
  const LooMeanSeries loo = loo_means(data.targets());

  std::vector<FoldResult> folds;
  folds.reserve(n);

  if (spec.kind == PredictorKind::Mean) {
    // The constant predictor trained without row i is exactly the LOO mean,
    // computed once through the same total-sum identity loo_means uses.
    for (std::size_t i = 0; i < n; ++i) {
      folds.push_back({i, loo.values[i], loo.values[i]});
    }
    return folds;
  }

  const std::size_t d = data.dim();
  const auto y = data.targets().values();
  Matrix train;
  train.rows = n - 1;
  train.cols = d;
  train.data.resize((n - 1) * d);
  std::vector<double> train_y(n - 1);

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto row = data.features().row(j);
      std::copy(row.begin(), row.end(), train.data.begin() + w * d);
      train_y[w] = y[j];
      ++w;
    }
    const auto test_row = data.features().row(i);
    const double prediction =
        spec.kind == PredictorKind::Linear
            ? fit_predict_linear(train, train_y, test_row, spec.ridge)
            : fit_predict_knn(train, train_y, test_row, spec.k);
    folds.push_back({i, prediction, loo.values[i]});
  }
  return folds;
}

PredictionSeries run_loocv(const SupervisedDataset& data,
                           const PredictorSpec& spec) {
  const std::vector<FoldResult> folds = loocv_folds(data, spec);
  std::vector<double> predictions(folds.size());
  for (const FoldResult& fold : folds) {
    predictions[fold.held_out_index] = fold.prediction;
  }
  return PredictionSeries(std::move(predictions));
}

ScoreReport score_loocv(const SupervisedDataset& data,
                        const PredictorSpec& spec) {
  return compute_scores(data.targets(), run_loocv(data, spec));
}

}  // namespace r2cv
