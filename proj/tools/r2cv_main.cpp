#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "r2cv/csv.hpp"
#include "r2cv/errors.hpp"
#include "r2cv/loocv.hpp"
#include "r2cv/render.hpp"
#include "r2cv/scores.hpp"
#include "r2cv/validation.hpp"

namespace {

// Documented exit codes: 0 ok, 2 I/O or parse, 3 zero variance,
// 4 too-short/range, 5 predictor failure, 6 verification failure.
int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const r2cv::ZeroVarianceTargets*>(&error)) return 3;
  if (dynamic_cast<const r2cv::SeriesTooShort*>(&error)) return 4;
  if (dynamic_cast<const r2cv::InvalidSpec*>(&error) ||
      dynamic_cast<const r2cv::SingularFit*>(&error) ||
      dynamic_cast<const r2cv::EmptyTrainingSet*>(&error)) {
    return 5;
  }
  if (dynamic_cast<const r2cv::Error*>(&error)) return 2;
  return 1;
}

struct ScoreArgs {
  std::string input;
  std::string target_col;
  std::string pred_col;
  std::string format = "text";
};

struct LoocvArgs {
  std::string input;
  std::string target_col;
  std::vector<std::string> feature_cols;
  std::string predictor = "mean";
  std::size_t k = 3;
  double ridge = 0.0;
  std::string emit_predictions;
  std::string format = "text";
};

struct CurveArgs {
  std::size_t n_min = 2;
  std::size_t n_max = 30;
  std::string format = "text";
};

struct VerifyArgs {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  bool inject_fault = false;
  std::string format = "text";
};

int cmd_score(const ScoreArgs& args) {
  const auto table = r2cv::csv::load_csv(args.input,
                                         {args.target_col, args.pred_col});
  const r2cv::TargetSeries targets(
      table.column(r2cv::csv::resolve_column(table, args.target_col)));
  const r2cv::PredictionSeries predictions(
      table.column(r2cv::csv::resolve_column(table, args.pred_col)));
  const r2cv::ScoreReport report = r2cv::compute_scores(targets, predictions);
  std::fputs(
      r2cv::render_score_report(report, r2cv::parse_format(args.format))
          .c_str(),
      stdout);
  return 0;
}

int cmd_loocv(const LoocvArgs& args) {
  std::vector<std::string> refs = {args.target_col};
  refs.insert(refs.end(), args.feature_cols.begin(), args.feature_cols.end());
  const auto table = r2cv::csv::load_csv(args.input, refs);

  r2cv::TargetSeries targets(
      table.column(r2cv::csv::resolve_column(table, args.target_col)));
  const std::size_t n = targets.size();

  r2cv::Matrix features;
  features.rows = n;
  features.cols = args.feature_cols.size();
  features.data.reserve(n * features.cols);
  std::vector<std::vector<double>> columns;
  columns.reserve(args.feature_cols.size());
  for (const std::string& ref : args.feature_cols) {
    columns.push_back(table.column(r2cv::csv::resolve_column(table, ref)));
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& column : columns) features.data.push_back(column[r]);
  }

  const r2cv::SupervisedDataset data(std::move(features), std::move(targets));
  const r2cv::PredictorSpec spec{r2cv::parse_predictor_kind(args.predictor),
                                 args.k, args.ridge};
  const std::vector<r2cv::FoldResult> folds = r2cv::loocv_folds(data, spec);

  std::vector<double> values(folds.size());
  for (const r2cv::FoldResult& fold : folds) {
    values[fold.held_out_index] = fold.prediction;
  }
  const r2cv::PredictionSeries predictions(std::move(values));
  const r2cv::ScoreReport report =
      r2cv::compute_scores(data.targets(), predictions);

  if (!args.emit_predictions.empty()) {
    std::ofstream out(args.emit_predictions);
    if (!out) {
      throw r2cv::CsvError("cannot write '" + args.emit_predictions + "'");
    }
    out << r2cv::render_fold_predictions_csv(folds, data.targets());
  }

  std::fputs(
      r2cv::render_score_report(report, r2cv::parse_format(args.format))
          .c_str(),
      stdout);
  return 0;
}

int cmd_naive_curve(const CurveArgs& args) {
  const auto curve = r2cv::naive_curve(args.n_min, args.n_max);
  std::fputs(
      r2cv::render_curve(curve, r2cv::parse_format(args.format)).c_str(),
      stdout);
  return 0;
}

int cmd_verify(const VerifyArgs& args) {
  r2cv::validation::ExperimentConfig config;
  config.trials = args.trials;
  config.seed = args.seed;

  r2cv::validation::VerificationReport report;
  for (const auto distribution : {r2cv::validation::Distribution::Uniform,
                                  r2cv::validation::Distribution::Normal,
                                  r2cv::validation::Distribution::Lognormal}) {
    config.distribution = distribution;
    report = r2cv::validation::merge(report,
                                     r2cv::validation::verify_all(config));
  }
  if (args.inject_fault) {
    report.max_rel_identity_gap =
        std::max(report.max_rel_identity_gap, 1e-3);
  }

  std::fputs(
      r2cv::render_verification(report, r2cv::parse_format(args.format))
          .c_str(),
      stdout);

  const auto failures = r2cv::validation::failing_checks(report);
  if (!failures.empty()) {
    for (const std::string& name : failures) {
      std::fprintf(stderr, "verification failed: %s\n", name.c_str());
    }
    return 6;
  }
  return 0;
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Coefficient-of-determination scoring that stays honest under "
      "leave-one-out cross-validation"};
  app.require_subcommand(1);

  ScoreArgs score_args;
  CLI::App* score = app.add_subcommand(
      "score", "Score a CSV of targets and predictions");
  score->add_option("--input", score_args.input, "Input CSV path")
      ->required();
  score->add_option("--target-col", score_args.target_col,
                    "Target column (name or zero-based index)")
      ->required();
  score->add_option("--pred-col", score_args.pred_col,
                    "Prediction column (name or zero-based index)")
      ->required();
  add_format_option(score, score_args.format);

  LoocvArgs loocv_args;
  CLI::App* loocv = app.add_subcommand(
      "loocv", "Run leave-one-out cross-validation on a CSV");
  loocv->add_option("--input", loocv_args.input, "Input CSV path")
      ->required();
  loocv->add_option("--target-col", loocv_args.target_col,
                    "Target column (name or zero-based index)")
      ->required();
  loocv->add_option("--feature-cols", loocv_args.feature_cols,
                    "Comma-separated feature columns")
      ->delimiter(',');
  loocv->add_option("--predictor", loocv_args.predictor,
                    "Predictor: mean, linear or knn")
      ->check(CLI::IsMember({"mean", "linear", "knn"}));
  loocv->add_option("--k", loocv_args.k, "Neighbor count for knn");
  loocv->add_option("--ridge", loocv_args.ridge,
                    "Ridge regularization for linear");
  loocv->add_option("--emit-predictions", loocv_args.emit_predictions,
                    "Write per-fold predictions to this CSV path");
  add_format_option(loocv, loocv_args.format);

  CurveArgs curve_args;
  CLI::App* curve = app.add_subcommand(
      "naive-curve", "Closed-form naive-baseline score for a range of n");
  curve->add_option("--n-min", curve_args.n_min, "Smallest n (>= 2)");
  curve->add_option("--n-max", curve_args.n_max, "Largest n");
  add_format_option(curve, curve_args.format);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Randomized verification of the scoring identities");
  verify->add_option("--trials", verify_args.trials,
                     "Trials per check, size and distribution");
  verify->add_option("--seed", verify_args.seed, "Random seed");
  verify->add_flag("--inject-fault", verify_args.inject_fault,
                   "Force a verification failure (testing aid)");
  add_format_option(verify, verify_args.format);

  CLI11_PARSE(app, argc, argv);

  try {
    if (score->parsed()) return cmd_score(score_args);
    if (loocv->parsed()) return cmd_loocv(loocv_args);
    if (curve->parsed()) return cmd_naive_curve(curve_args);
    if (verify->parsed()) return cmd_verify(verify_args);
  } catch (const std::exception& error) {
    std::fprintf(stderr, "error: %s\n", error.what());
    return exit_code_for(error);
  }
  return 0;
}
