#include "r2cv/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "compensated_sum.hpp"
#include "r2cv/errors.hpp"

namespace r2cv::validation {
namespace {

void validate_config(const ExperimentConfig& config) {
  if (config.trials < 1) throw InvalidSpec("trials must be >= 1");
  if (config.n_values.empty()) throw InvalidSpec("n_values must not be empty");
  for (std::size_t n : config.n_values) {
    if (n < 2) throw InvalidSpec("every n must be >= 2");
  }
}

bool all_equal(std::span<const double> values) {
  for (double v : values) {
    if (v != values.front()) return false;
  }
  return true;
}

std::vector<double> draw_series(Rng& rng, std::size_t n,
                                Distribution distribution,
                                double scale = 1.0) {
  std::vector<double> out(n);
  for (double& v : out) v = rng.draw(distribution) * scale;
  return out;
}

// Gap between two scores, relative to the larger magnitude but floored at 1
// so near-zero scores compare absolutely.
double score_gap(double lhs, double rhs) {
  return std::abs(lhs - rhs) /
         std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

// Relative gap between two nonnegative sums.
double sum_gap(double lhs, double rhs) {
  if (lhs == rhs) return 0.0;
  return std::abs(lhs - rhs) / std::max(lhs, rhs);
}

}  // namespace

Distribution parse_distribution(std::string_view name) {
  if (name == "uniform") return Distribution::Uniform;
  if (name == "normal") return Distribution::Normal;
  if (name == "lognormal") return Distribution::Lognormal;
  throw InvalidSpec("unknown distribution '" + std::string(name) +
                    "' (expected uniform, normal or lognormal)");
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double Rng::normal() {
  // Box-Muller; u1 stays in (0, 1] so the log is finite.
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::draw(Distribution distribution) {
  switch (distribution) {
    case Distribution::Uniform:
      return uniform(-1.0, 1.0);
    case Distribution::Normal:
      return normal();
    case Distribution::Lognormal:
      return std::exp(normal());
  }
  throw InvalidSpec("unknown distribution");
}

bool verification_passes(const VerificationReport& report) {
  return failing_checks(report).empty();
}

std::vector<std::string> failing_checks(const VerificationReport& report) {
  std::vector<std::string> failures;
  if (report.max_rel_identity_gap > kIdentityRelTol) {
    failures.push_back("adjustment_identity");
  }
  if (report.max_rel_c_alpha_b_gap > kCAlphaBRelTol) {
    failures.push_back("c_equals_alpha_b");
  }
  if (report.max_rel_naive_gap > kNaiveRelTol) {
    failures.push_back("variance_independence");
  }
  if (report.max_rel_translation_gap > kTranslationRelTol) {
    failures.push_back("translation_invariance");
  }
  return failures;
}

VerificationReport merge(const VerificationReport& lhs,
                         const VerificationReport& rhs) {
  VerificationReport out;
  out.max_abs_identity_gap =
      std::max(lhs.max_abs_identity_gap, rhs.max_abs_identity_gap);
  out.max_rel_identity_gap =
      std::max(lhs.max_rel_identity_gap, rhs.max_rel_identity_gap);
  out.max_rel_c_alpha_b_gap =
      std::max(lhs.max_rel_c_alpha_b_gap, rhs.max_rel_c_alpha_b_gap);
  out.max_rel_naive_gap =
      std::max(lhs.max_rel_naive_gap, rhs.max_rel_naive_gap);
  out.max_rel_translation_gap =
      std::max(lhs.max_rel_translation_gap, rhs.max_rel_translation_gap);
  out.trials_run = lhs.trials_run + rhs.trials_run;
  out.trials_skipped = lhs.trials_skipped + rhs.trials_skipped;
  return out;
}

LooMeanSeries oracle_loo_means(const TargetSeries& targets) {
  const auto y = targets.values();
  const std::size_t n = y.size();
  LooMeanSeries out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    detail::CompensatedSum sum;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) sum.add(y[j]);
    }
    out.values[i] = sum.value() / static_cast<double>(n - 1);
  }
  return out;
}

OracleSums oracle_sums(const TargetSeries& targets) {
  const auto y = targets.values();
  const std::size_t n = y.size();
  const LooMeanSeries loo = oracle_loo_means(targets);

  detail::CompensatedSum total;
  for (double v : y) total.add(v);
  const double mean = total.value() / static_cast<double>(n);

  detail::CompensatedSum b, c;
  for (std::size_t i = 0; i < n; ++i) {
    const double dev = y[i] - mean;
    b.add(dev * dev);
    const double loo_dev = y[i] - loo.values[i];
    c.add(loo_dev * loo_dev);
  }
  return OracleSums{b.value(), c.value()};
}

VerificationReport verify_c_equals_alpha_b(const ExperimentConfig& config) {
  validate_config(config);
  Rng rng(config.seed);
  VerificationReport report;
  for (std::size_t n : config.n_values) {
    const double ratio = static_cast<double>(n) / static_cast<double>(n - 1);
    const double alpha = ratio * ratio;
    for (std::size_t t = 0; t < config.trials; ++t) {
      std::vector<double> y = draw_series(rng, n, config.distribution);
      if (all_equal(y)) {
        ++report.trials_skipped;
        continue;
      }
      const OracleSums sums = oracle_sums(TargetSeries(std::move(y)));
      if (sums.c == 0.0) {
        ++report.trials_skipped;
        continue;
      }
      const double gap = std::abs(sums.c - alpha * sums.b) / sums.c;
      report.max_rel_c_alpha_b_gap =
          std::max(report.max_rel_c_alpha_b_gap, gap);
      ++report.trials_run;
    }
  }
  return report;
}

VerificationReport verify_adjustment_identity(const ExperimentConfig& config) {
  validate_config(config);
  Rng rng(config.seed);
  VerificationReport report;
  for (std::size_t n : config.n_values) {
    for (std::size_t t = 0; t < config.trials; ++t) {
      std::vector<double> y = draw_series(rng, n, config.distribution);
      std::vector<double> p = draw_series(rng, n, config.distribution);
      if (all_equal(y)) {
        ++report.trials_skipped;
        continue;
      }
      const TargetSeries targets(std::move(y));
      const PredictionSeries predictions(std::move(p));
      const double adjusted = adjust_r2(r2_standard(targets, predictions), n);
      const double direct = r2_cv_direct(targets, predictions);
      report.max_abs_identity_gap =
          std::max(report.max_abs_identity_gap, std::abs(adjusted - direct));
      report.max_rel_identity_gap =
          std::max(report.max_rel_identity_gap, score_gap(adjusted, direct));
      ++report.trials_run;
    }
  }
  return report;
}

VerificationReport verify_variance_independence(const ExperimentConfig& config) {
  validate_config(config);
  Rng rng(config.seed);
  VerificationReport report;
  for (std::size_t n : config.n_values) {
    const double closed = r2_naive_closed_form(n);
    for (std::size_t t = 0; t < config.trials; ++t) {
      // sweep target scales log-uniformly from 1e-3 to 1e3
      const double scale =
          config.trials > 1
              ? std::pow(10.0, -3.0 + 6.0 * static_cast<double>(t) /
                                    static_cast<double>(config.trials - 1))
              : 1.0;
      std::vector<double> y = draw_series(rng, n, config.distribution, scale);
      if (all_equal(y)) {
        ++report.trials_skipped;
        continue;
      }
      const double empirical = r2_naive_empirical(TargetSeries(std::move(y)));
      const double gap = std::abs(empirical - closed) / std::abs(closed);
      report.max_rel_naive_gap = std::max(report.max_rel_naive_gap, gap);
      ++report.trials_run;
    }
  }
  return report;
}

VerificationReport verify_translation_invariance(const ExperimentConfig& config) {
  validate_config(config);
  Rng rng(config.seed);
  VerificationReport report;
  for (std::size_t n : config.n_values) {
    for (std::size_t t = 0; t < config.trials; ++t) {
      std::vector<double> y = draw_series(rng, n, config.distribution);
      std::vector<double> p = draw_series(rng, n, config.distribution);
      const double shift = rng.uniform(-1e6, 1e6);
      if (all_equal(y)) {
        ++report.trials_skipped;
        continue;
      }

      std::vector<double> y_shifted(y);
      for (double& v : y_shifted) v += shift;
      std::vector<double> p_shifted(p);
      for (double& v : p_shifted) v += shift;

      const TargetSeries targets(std::move(y));
      const TargetSeries targets_shifted(std::move(y_shifted));
      const PredictionSeries predictions(std::move(p));

      const DecompositionTerms base =
          decomposition_terms(targets, predictions);
      // b and c only see the targets, so a target-only shift must leave
      // them alone; a compares shifted targets against shifted predictions.
      const DecompositionTerms target_shift =
          decomposition_terms(targets_shifted, predictions);
      const DecompositionTerms joint_shift = decomposition_terms(
          targets_shifted, PredictionSeries(std::move(p_shifted)));

      const double gap = std::max({sum_gap(target_shift.b, base.b),
                                   sum_gap(target_shift.c, base.c),
                                   sum_gap(joint_shift.a, base.a)});
      report.max_rel_translation_gap =
          std::max(report.max_rel_translation_gap, gap);
      ++report.trials_run;
    }
  }
  return report;
}

VerificationReport verify_all(const ExperimentConfig& config) {
  VerificationReport report = verify_c_equals_alpha_b(config);
  report = merge(report, verify_adjustment_identity(config));
  report = merge(report, verify_variance_independence(config));
  report = merge(report, verify_translation_invariance(config));
  return report;
}

}  // namespace r2cv::validation
