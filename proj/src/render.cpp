#include "r2cv/render.hpp"

#include <cstdio>
#include <string>

#include <json.hpp>

#include "r2cv/errors.hpp"

namespace r2cv {
namespace {

using ordered_json = nlohmann::ordered_json;

// Full precision: 17 significant digits round-trip any double.
std::string fmt_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string fmt_fixed(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string fmt_gap(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

std::string check_line(const std::string& name, double gap, double tol) {
  std::string line = name;
  line.resize(26, ' ');
  line += "max gap " + fmt_gap(gap) + "  tol " + fmt_gap(tol) + "  ";
  line += gap <= tol ? "pass" : "FAIL";
  line += '\n';
  return line;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw InvalidSpec("unknown format '" + std::string(name) +
                    "' (expected text, json or csv)");
}

std::vector<CurvePoint> naive_curve(std::size_t n_min, std::size_t n_max) {
  if (n_min < 2) {
    throw SeriesTooShort("n_min must be >= 2, got " + std::to_string(n_min));
  }
  if (n_max < n_min) {
    throw SeriesTooShort("empty range: n_max " + std::to_string(n_max) +
                         " is below n_min " + std::to_string(n_min));
  }
  std::vector<CurvePoint> curve;
  curve.reserve(n_max - n_min + 1);
  for (std::size_t n = n_min; n <= n_max; ++n) {
    curve.push_back({n, r2_naive_closed_form(n)});
  }
  return curve;
}

std::string render_score_report(const ScoreReport& report,
                                OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: {
      std::string out;
      const auto row = [&out](const char* name, double value) {
        std::string line = name;
        line.resize(20, ' ');
        out += line + fmt_fixed(value) + '\n';
      };
      row("r2_standard", report.r2_standard);
      row("r2_cv_direct", report.r2_cv_direct);
      row("r2_cv_adjusted", report.r2_cv_adjusted);
      row("r2_naive_closed", report.r2_naive_closed);
      row("r2_naive_empirical", report.r2_naive_empirical);
      std::string line = "n";
      line.resize(20, ' ');
      out += line + std::to_string(report.n) + '\n';
      return out;
    }
    case OutputFormat::Json: {
      ordered_json j;
      j["r2_standard"] = report.r2_standard;
      j["r2_cv_direct"] = report.r2_cv_direct;
      j["r2_cv_adjusted"] = report.r2_cv_adjusted;
      j["r2_naive_closed"] = report.r2_naive_closed;
      j["r2_naive_empirical"] = report.r2_naive_empirical;
      j["n"] = report.n;
      return j.dump() + '\n';
    }
    case OutputFormat::Csv: {
      std::string out =
          "r2_standard,r2_cv_direct,r2_cv_adjusted,r2_naive_closed,"
          "r2_naive_empirical,n\n";
      out += fmt_full(report.r2_standard) + ',' +
             fmt_full(report.r2_cv_direct) + ',' +
             fmt_full(report.r2_cv_adjusted) + ',' +
             fmt_full(report.r2_naive_closed) + ',' +
             fmt_full(report.r2_naive_empirical) + ',' +
             std::to_string(report.n) + '\n';
      return out;
    }
  }
  throw InvalidSpec("unknown format");
}

std::string render_curve(const std::vector<CurvePoint>& curve,
                         OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: {
      std::string out;
      for (const CurvePoint& point : curve) {
        std::string line = std::to_string(point.n);
        line.resize(8, ' ');
        out += line + fmt_fixed(point.r2_naive) + '\n';
      }
      return out;
    }
    case OutputFormat::Json: {
      ordered_json rows = ordered_json::array();
      for (const CurvePoint& point : curve) {
        ordered_json row;
        row["n"] = point.n;
        row["r2_naive"] = point.r2_naive;
        rows.push_back(row);
      }
      ordered_json j;
      if (!curve.empty()) {
        j["n_min"] = curve.front().n;
        j["n_max"] = curve.back().n;
      }
      j["rows"] = rows;
      return j.dump() + '\n';
    }
    case OutputFormat::Csv: {
      std::string out = "n,r2_naive\n";
      for (const CurvePoint& point : curve) {
        out += std::to_string(point.n) + ',' + fmt_full(point.r2_naive) + '\n';
      }
      return out;
    }
  }
  throw InvalidSpec("unknown format");
}

std::string render_verification(const validation::VerificationReport& report,
                                OutputFormat format) {
  const bool pass = validation::verification_passes(report);
  switch (format) {
    case OutputFormat::Text: {
      std::string out;
      out += check_line("adjustment_identity", report.max_rel_identity_gap,
                        validation::kIdentityRelTol);
      out += check_line("c_equals_alpha_b", report.max_rel_c_alpha_b_gap,
                        validation::kCAlphaBRelTol);
      out += check_line("variance_independence", report.max_rel_naive_gap,
                        validation::kNaiveRelTol);
      out += check_line("translation_invariance",
                        report.max_rel_translation_gap,
                        validation::kTranslationRelTol);
      out += "abs identity gap          " +
             fmt_gap(report.max_abs_identity_gap) + '\n';
      out += "trials run " + std::to_string(report.trials_run) + ", skipped " +
             std::to_string(report.trials_skipped) + '\n';
      out += std::string("result ") + (pass ? "PASS" : "FAIL") + '\n';
      return out;
    }
    case OutputFormat::Json: {
      ordered_json j;
      j["max_abs_identity_gap"] = report.max_abs_identity_gap;
      j["max_rel_identity_gap"] = report.max_rel_identity_gap;
      j["max_rel_c_alpha_b_gap"] = report.max_rel_c_alpha_b_gap;
      j["max_rel_naive_gap"] = report.max_rel_naive_gap;
      j["max_rel_translation_gap"] = report.max_rel_translation_gap;
      j["trials_run"] = report.trials_run;
      j["trials_skipped"] = report.trials_skipped;
      j["pass"] = pass;
      return j.dump() + '\n';
    }
    case OutputFormat::Csv: {
      std::string out =
          "max_abs_identity_gap,max_rel_identity_gap,max_rel_c_alpha_b_gap,"
          "max_rel_naive_gap,max_rel_translation_gap,trials_run,"
          "trials_skipped,pass\n";
      out += fmt_full(report.max_abs_identity_gap) + ',' +
             fmt_full(report.max_rel_identity_gap) + ',' +
             fmt_full(report.max_rel_c_alpha_b_gap) + ',' +
             fmt_full(report.max_rel_naive_gap) + ',' +
             fmt_full(report.max_rel_translation_gap) + ',' +
             std::to_string(report.trials_run) + ',' +
             std::to_string(report.trials_skipped) + ',' +
             (pass ? "true" : "false") + '\n';
      return out;
    }
  }
  throw InvalidSpec("unknown format");
}

std::string render_fold_predictions_csv(const std::vector<FoldResult>& folds,
                                        const TargetSeries& targets) {
  std::string out = "held_out_index,y,yhat,loo_mean\n";
  for (const FoldResult& fold : folds) {
    out += std::to_string(fold.held_out_index) + ',' +
           fmt_full(targets[fold.held_out_index]) + ',' +
           fmt_full(fold.prediction) + ',' + fmt_full(fold.training_mean) +
           '\n';
  }
  return out;
}

}  // namespace r2cv
