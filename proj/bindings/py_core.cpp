#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "r2cv/errors.hpp"
#include "r2cv/loocv.hpp"
#include "r2cv/scores.hpp"
#include "r2cv/series.hpp"
#include "r2cv/validation.hpp"

namespace py = pybind11;

namespace {

r2cv::Matrix features_from(const std::vector<std::vector<double>>& rows,
                           std::size_t n_targets) {
  if (rows.empty()) {
    // no features: an n x 0 matrix so the row count still matches
    r2cv::Matrix m;
    m.rows = n_targets;
    return m;
  }
  return r2cv::Matrix::from_rows(rows);
}

r2cv::PredictorSpec spec_from(const std::string& predictor, std::size_t k,
                              double ridge) {
  return {r2cv::parse_predictor_kind(predictor), k, ridge};
}

r2cv::validation::ExperimentConfig config_from(
    const std::vector<std::size_t>& n_values, std::size_t trials,
    std::uint64_t seed, const std::string& distribution) {
  r2cv::validation::ExperimentConfig config;
  config.n_values = n_values;
  config.trials = trials;
  config.seed = seed;
  config.distribution = r2cv::validation::parse_distribution(distribution);
  return config;
}

constexpr const char* kDefaultDistribution = "normal";
const std::vector<std::size_t> kDefaultNValues = {2, 3, 5, 10, 50, 200};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cross-validated R^2 scoring (C++ core)";
  m.attr("__version__") = "0.1.0";

  auto base = py::register_exception<r2cv::Error>(m, "Error");
  py::register_exception<r2cv::SeriesTooShort>(m, "SeriesTooShort", base);
  py::register_exception<r2cv::NonFiniteInput>(m, "NonFiniteInput", base);
  py::register_exception<r2cv::LengthMismatch>(m, "LengthMismatch", base);
  py::register_exception<r2cv::ZeroVarianceTargets>(m, "ZeroVarianceTargets",
                                                    base);
  py::register_exception<r2cv::EmptyTrainingSet>(m, "EmptyTrainingSet", base);
  py::register_exception<r2cv::InvalidSpec>(m, "InvalidSpec", base);
  py::register_exception<r2cv::SingularFit>(m, "SingularFit", base);

  py::class_<r2cv::DecompositionTerms>(m, "DecompositionTerms")
      .def_readonly("a", &r2cv::DecompositionTerms::a)
      .def_readonly("b", &r2cv::DecompositionTerms::b)
      .def_readonly("c", &r2cv::DecompositionTerms::c)
      .def_readonly("alpha", &r2cv::DecompositionTerms::alpha)
      .def("__repr__", [](const r2cv::DecompositionTerms& t) {
        return "DecompositionTerms(a=" + std::to_string(t.a) +
               ", b=" + std::to_string(t.b) + ", c=" + std::to_string(t.c) +
               ", alpha=" + std::to_string(t.alpha) + ")";
      });

  py::class_<r2cv::ScoreReport>(m, "ScoreReport")
      .def_readonly("r2_standard", &r2cv::ScoreReport::r2_standard)
      .def_readonly("r2_cv_direct", &r2cv::ScoreReport::r2_cv_direct)
      .def_readonly("r2_cv_adjusted", &r2cv::ScoreReport::r2_cv_adjusted)
      .def_readonly("r2_naive_closed", &r2cv::ScoreReport::r2_naive_closed)
      .def_readonly("r2_naive_empirical",
                    &r2cv::ScoreReport::r2_naive_empirical)
      .def_readonly("n", &r2cv::ScoreReport::n)
      .def("__repr__", [](const r2cv::ScoreReport& r) {
        return "ScoreReport(r2_standard=" + std::to_string(r.r2_standard) +
               ", r2_cv_direct=" + std::to_string(r.r2_cv_direct) +
               ", r2_cv_adjusted=" + std::to_string(r.r2_cv_adjusted) +
               ", r2_naive_closed=" + std::to_string(r.r2_naive_closed) +
               ", r2_naive_empirical=" +
               std::to_string(r.r2_naive_empirical) +
               ", n=" + std::to_string(r.n) + ")";
      });

  py::class_<r2cv::validation::VerificationReport>(m, "VerificationReport")
      .def_readonly("max_abs_identity_gap",
                    &r2cv::validation::VerificationReport::max_abs_identity_gap)
      .def_readonly("max_rel_identity_gap",
                    &r2cv::validation::VerificationReport::max_rel_identity_gap)
      .def_readonly(
          "max_rel_c_alpha_b_gap",
          &r2cv::validation::VerificationReport::max_rel_c_alpha_b_gap)
      .def_readonly("max_rel_naive_gap",
                    &r2cv::validation::VerificationReport::max_rel_naive_gap)
      .def_readonly(
          "max_rel_translation_gap",
          &r2cv::validation::VerificationReport::max_rel_translation_gap)
      .def_readonly("trials_run",
                    &r2cv::validation::VerificationReport::trials_run)
      .def_readonly("trials_skipped",
                    &r2cv::validation::VerificationReport::trials_skipped)
      .def("__repr__", [](const r2cv::validation::VerificationReport& r) {
        return "VerificationReport(max_rel_identity_gap=" +
               std::to_string(r.max_rel_identity_gap) +
               ", max_rel_c_alpha_b_gap=" +
               std::to_string(r.max_rel_c_alpha_b_gap) +
               ", max_rel_naive_gap=" + std::to_string(r.max_rel_naive_gap) +
               ", max_rel_translation_gap=" +
               std::to_string(r.max_rel_translation_gap) +
               ", trials_run=" + std::to_string(r.trials_run) + ")";
      });

  m.def(
      "loo_means",
      [](const std::vector<double>& targets) {
        return r2cv::loo_means(r2cv::TargetSeries(targets)).values;
      },
      py::arg("targets"),
      "Leave-one-out means: element i is the mean of all targets except i");

  m.def(
      "r2_standard",
      [](const std::vector<double>& targets,
         const std::vector<double>& predictions) {
        return r2cv::r2_standard(r2cv::TargetSeries(targets),
                                 r2cv::PredictionSeries(predictions));
      },
      py::arg("targets"), py::arg("predictions"),
      "Standard coefficient of determination 1 - A/B");

  m.def(
      "r2_cv_direct",
      [](const std::vector<double>& targets,
         const std::vector<double>& predictions) {
        return r2cv::r2_cv_direct(r2cv::TargetSeries(targets),
                                  r2cv::PredictionSeries(predictions));
      },
      py::arg("targets"), py::arg("predictions"),
      "Cross-validated score 1 - A/C using leave-one-out means");

  m.def("r2_naive_closed_form", &r2cv::r2_naive_closed_form, py::arg("n"),
        "Closed-form naive-baseline score 1 - (n/(n-1))^2");

  m.def(
      "r2_naive_empirical",
      [](const std::vector<double>& targets) {
        return r2cv::r2_naive_empirical(r2cv::TargetSeries(targets));
      },
      py::arg("targets"),
      "Empirical naive-baseline score 1 - C/B; matches the closed form");

  m.def("adjust_r2", &r2cv::adjust_r2, py::arg("r2"), py::arg("n"),
        "Map a standard score onto the cross-validated scale");

  m.def(
      "decomposition_terms",
      [](const std::vector<double>& targets,
         const std::vector<double>& predictions) {
        return r2cv::decomposition_terms(r2cv::TargetSeries(targets),
                                         r2cv::PredictionSeries(predictions));
      },
      py::arg("targets"), py::arg("predictions"),
      "Sums A, B, C and the ratio alpha linking them (c = alpha * b)");

  m.def(
      "compute_scores",
      [](const std::vector<double>& targets,
         const std::vector<double>& predictions) {
        return r2cv::compute_scores(r2cv::TargetSeries(targets),
                                    r2cv::PredictionSeries(predictions));
      },
      py::arg("targets"), py::arg("predictions"),
      "All scores for one (targets, predictions) pair");

  m.def(
      "fit_predict_mean",
      [](const std::vector<double>& train_targets) {
        return r2cv::fit_predict_mean(train_targets);
      },
      py::arg("train_targets"));

  m.def(
      "fit_predict_linear",
      [](const std::vector<std::vector<double>>& train_features,
         const std::vector<double>& train_targets,
         const std::vector<double>& test_row, double ridge) {
        return r2cv::fit_predict_linear(
            features_from(train_features, train_targets.size()),
            train_targets, test_row, ridge);
      },
      py::arg("train_features"), py::arg("train_targets"),
      py::arg("test_row"), py::arg("ridge") = 0.0);

  m.def(
      "fit_predict_knn",
      [](const std::vector<std::vector<double>>& train_features,
         const std::vector<double>& train_targets,
         const std::vector<double>& test_row, std::size_t k) {
        return r2cv::fit_predict_knn(
            features_from(train_features, train_targets.size()),
            train_targets, test_row, k);
      },
      py::arg("train_features"), py::arg("train_targets"),
      py::arg("test_row"), py::arg("k"));

  m.def(
      "run_loocv",
      [](const std::vector<std::vector<double>>& features,
         const std::vector<double>& targets, const std::string& predictor,
         std::size_t k, double ridge) {
        const r2cv::SupervisedDataset data(
            features_from(features, targets.size()),
            r2cv::TargetSeries(targets));
        const auto predictions =
            r2cv::run_loocv(data, spec_from(predictor, k, ridge));
        return std::vector<double>(predictions.values().begin(),
                                   predictions.values().end());
      },
      py::arg("features"), py::arg("targets"), py::arg("predictor") = "mean",
      py::arg("k") = 3, py::arg("ridge") = 0.0,
      "Leave-one-out predictions, one per row");

  m.def(
      "score_loocv",
      [](const std::vector<std::vector<double>>& features,
         const std::vector<double>& targets, const std::string& predictor,
         std::size_t k, double ridge) {
        const r2cv::SupervisedDataset data(
            features_from(features, targets.size()),
            r2cv::TargetSeries(targets));
        return r2cv::score_loocv(data, spec_from(predictor, k, ridge));
      },
      py::arg("features"), py::arg("targets"), py::arg("predictor") = "mean",
      py::arg("k") = 3, py::arg("ridge") = 0.0,
      "Leave-one-out cross-validation plus the full score report");

  m.def(
      "oracle_loo_means",
      [](const std::vector<double>& targets) {
        return r2cv::validation::oracle_loo_means(r2cv::TargetSeries(targets))
            .values;
      },
      py::arg("targets"),
      "Leave-one-out means by per-index re-summation (O(n^2) oracle)");

  const auto bind_verify = [&m](const char* name, auto fn, const char* doc) {
    m.def(
        name,
        [fn](const std::vector<std::size_t>& n_values, std::size_t trials,
             std::uint64_t seed, const std::string& distribution) {
          return fn(config_from(n_values, trials, seed, distribution));
        },
        py::arg("n_values") = kDefaultNValues, py::arg("trials") = 1000,
        py::arg("seed") = 42,
        py::arg("distribution") = kDefaultDistribution, doc);
  };
  bind_verify("verify_c_equals_alpha_b",
              &r2cv::validation::verify_c_equals_alpha_b,
              "Randomized check that c = alpha * b");
  bind_verify("verify_adjustment_identity",
              &r2cv::validation::verify_adjustment_identity,
              "Randomized check of the adjustment identity");
  bind_verify("verify_variance_independence",
              &r2cv::validation::verify_variance_independence,
              "Randomized check that the naive score ignores target scale");
  bind_verify("verify_translation_invariance",
              &r2cv::validation::verify_translation_invariance,
              "Randomized check of translation invariance of A, B and C");
  bind_verify("verify_all", &r2cv::validation::verify_all,
              "All four randomized checks, merged");

  m.def("verification_passes", &r2cv::validation::verification_passes,
        py::arg("report"),
        "True when every gap in the report is within tolerance");
}
