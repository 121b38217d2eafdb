"""Accuracy and cross-trial learning statistics.

Improvement is final accuracy minus initial accuracy per trial; the report
carries the sample mean, its standard error (n-1 denominator), the t-score
mean/SE with n-1 degrees of freedom, and significance stars for the
one-sided test of no average improvement at the 95% / 99% / 99.99% levels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats as sp_stats

__all__ = ["TrialReport", "STAR_LEVELS", "accuracy", "summarize"]

# One-sided p-value thresholds and their star labels, tightest first.
STAR_LEVELS = ((1e-4, "***"), (1e-2, "**"), (5e-2, "*"))


@dataclass(frozen=True, eq=False)
class TrialReport:
    kind: int | None
    initial: np.ndarray
    final: np.ndarray
    improvement: np.ndarray
    mean_improvement: float
    std_error: float | None
    t_score: float | None
    p_value: float | None
    stars: str


def accuracy(predictions, labels) -> float:
    """Fraction of predictions matching the labels."""
    p = np.atleast_1d(np.asarray(predictions, dtype=bool))
    l = np.atleast_1d(np.asarray(labels, dtype=bool))
    if p.shape != l.shape:
        raise ValueError(f"length mismatch: {p.shape} vs {l.shape}")
    if p.size == 0:
        raise ValueError("cannot score an empty prediction vector")
    return float(np.mean(p == l))


def stars_for_p(p_value: float) -> str:
    for level, label in STAR_LEVELS:
        if p_value < level:
            return label
    return ""


def summarize(initials, finals, kind: int | None = None) -> TrialReport:
    """Cross-trial report of the accuracy improvement."""
    initial = np.atleast_1d(np.asarray(initials, dtype=float))
    final = np.atleast_1d(np.asarray(finals, dtype=float))
    if initial.shape != final.shape:
        raise ValueError(f"length mismatch: {initial.shape} vs {final.shape}")
    if initial.size == 0:
        raise ValueError("need at least one trial")
    if np.any(initial < 0) or np.any(initial > 1) or np.any(final < 0) or np.any(final > 1):
        raise ValueError("accuracies must be fractions in [0, 1]")

    improvement = final - initial
    mean = float(improvement.mean())
    n = improvement.size
    if n < 2:
        return TrialReport(kind, initial, final, improvement, mean, None, None, None, "")

    se = float(improvement.std(ddof=1) / np.sqrt(n))
    if se == 0.0:
        # Degenerate spread: t is mean/SE only when SE > 0.
        return TrialReport(kind, initial, final, improvement, mean, se, None, None, "")
    t = mean / se
    p = float(sp_stats.t.sf(t, df=n - 1))
    return TrialReport(kind, initial, final, improvement, mean, se, t, p, stars_for_p(p))
