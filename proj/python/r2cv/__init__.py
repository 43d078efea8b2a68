"""Cross-validated R^2 scoring.

Standard R^2 misreports leave-one-out cross-validated predictions: the
constant-mean baseline lands below zero instead of at zero, because the
denominator uses the whole-dataset mean rather than each fold's training
mean.  This package computes the standard score, the directly
cross-validated score (which puts the baseline back at zero), the adjusted
score mapping one onto the other, and the closed-form baseline value, plus
a LOOCV harness and randomized verification of the identities that connect
them.
"""

from ._core import (
    DecompositionTerms,
    EmptyTrainingSet,
    Error,
    InvalidSpec,
    LengthMismatch,
    NonFiniteInput,
    ScoreReport,
    SeriesTooShort,
    SingularFit,
    VerificationReport,
    ZeroVarianceTargets,
    __version__,
    adjust_r2,
    compute_scores,
    decomposition_terms,
    fit_predict_knn,
    fit_predict_linear,
    fit_predict_mean,
    loo_means,
    oracle_loo_means,
    r2_cv_direct,
    r2_naive_closed_form,
    r2_naive_empirical,
    r2_standard,
    run_loocv,
    score_loocv,
    verification_passes,
    verify_adjustment_identity,
    verify_all,
    verify_c_equals_alpha_b,
    verify_translation_invariance,
    verify_variance_independence,
)

__all__ = [
    "DecompositionTerms",
    "EmptyTrainingSet",
    "Error",
    "InvalidSpec",
    "LengthMismatch",
    "NonFiniteInput",
    "ScoreReport",
    "SeriesTooShort",
    "SingularFit",
    "VerificationReport",
    "ZeroVarianceTargets",
    "__version__",
    "adjust_r2",
    "compute_scores",
    "decomposition_terms",
    "fit_predict_knn",
    "fit_predict_linear",
    "fit_predict_mean",
    "loo_means",
    "oracle_loo_means",
    "r2_cv_direct",
    "r2_naive_closed_form",
    "r2_naive_empirical",
    "r2_standard",
    "run_loocv",
    "score_loocv",
    "verification_passes",
    "verify_adjustment_identity",
    "verify_all",
    "verify_c_equals_alpha_b",
    "verify_translation_invariance",
    "verify_variance_independence",
]
