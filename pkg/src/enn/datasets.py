"""Seeded generators for the six training datasets on the import-quantity square.

Each dataset maps points of the [0, 100]^2 steel/brass quantity square to a
boolean demand label.  Odd-numbered kinds shade a region as true (half
plane, disk, annulus); the matching even-numbered kind is its exact
negation.  Points on a region boundary are labeled false for odd kinds and
hence true for even kinds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["TrainingDataset", "DATASET_KINDS", "DEFAULT_PERIODS", "label_point", "generate"]

DATASET_KINDS = (1, 2, 3, 4, 5, 6)
DEFAULT_PERIODS = 100

_CENTER = 50.0
_R_OUTER_SQ = 50.0 ** 2
_R_INNER_SQ = 25.0 ** 2


@dataclass(frozen=True, eq=False)
class TrainingDataset:
    """Periods of (steel quantity, brass quantity, demand label)."""

    kind: int
    q_steel: np.ndarray
    q_brass: np.ndarray
    labels: np.ndarray
    seed: int

    def __post_init__(self) -> None:
        n = self.q_steel.size
        if self.q_brass.size != n or self.labels.size != n or n == 0:
            raise ValueError("dataset arrays must be nonempty and equally long")

    def __len__(self) -> int:
        return int(self.q_steel.size)

    @property
    def periods(self) -> list[tuple[float, float, bool]]:
        return [
            (float(s), float(b), bool(l))
            for s, b, l in zip(self.q_steel, self.q_brass, self.labels)
        ]


def _odd_region(kind: int, q1, q2):
    if kind == 1:
        return q1 + q2 < 100.0
    r_sq = (q1 - _CENTER) ** 2 + (q2 - _CENTER) ** 2
    if kind == 3:
        return r_sq < _R_OUTER_SQ
    return (r_sq > _R_INNER_SQ) & (r_sq < _R_OUTER_SQ)


def _labels(kind: int, q1, q2):
    odd = kind if kind % 2 == 1 else kind - 1
    mask = _odd_region(odd, q1, q2)
    return mask if kind % 2 == 1 else ~mask


def label_point(kind: int, q1: float, q2: float) -> bool:
    """Demand label of one point of the quantity square."""
    if kind not in DATASET_KINDS:
        raise ValueError(f"kind must be in {DATASET_KINDS}, got {kind}")
    if not (0.0 <= q1 <= 100.0 and 0.0 <= q2 <= 100.0):
        raise ValueError(f"quantities must lie in [0, 100], got ({q1}, {q2})")
    return bool(_labels(kind, np.float64(q1), np.float64(q2)))


def generate(kind: int, periods: int = DEFAULT_PERIODS, seed: int = 0) -> TrainingDataset:
    """Draw `periods` i.i.d. uniform points and label them; deterministic per seed."""
    if kind not in DATASET_KINDS:
        raise ValueError(f"kind must be in {DATASET_KINDS}, got {kind}")
    if periods < 1:
        raise ValueError(f"periods must be >= 1, got {periods}")
    rng = np.random.default_rng(seed)
    q = rng.uniform(0.0, 100.0, size=(periods, 2))
    labels = _labels(kind, q[:, 0], q[:, 1])
    for arr in (q, labels):
        arr.setflags(write=False)
    return TrainingDataset(
        kind=kind, q_steel=q[:, 0], q_brass=q[:, 1], labels=labels, seed=seed
    )
