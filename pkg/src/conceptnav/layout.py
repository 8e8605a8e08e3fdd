"""2D embedding of inter-video dissimilarities by stress majorization.

Stress is the sum over pairs of squared differences between layout
distance and target dissimilarity. Each iteration applies the standard
majorizing update, which never increases stress; iteration stops at the
cap or when the relative stress improvement falls below the tolerance.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from .errors import CorpusError

_SYMMETRY_TOL = 1e-12


def check_dissimilarities(delta: np.ndarray) -> np.ndarray:
    """Validate a square symmetric dissimilarity matrix with zero diagonal
    and entries in [0, 1]; returns it as a float array."""
    delta = np.asarray(delta, dtype=float)
    if delta.ndim != 2 or delta.shape[0] != delta.shape[1]:
        raise CorpusError(f"dissimilarity matrix must be square, got shape {delta.shape}")
    if not np.all(np.isfinite(delta)):
        raise CorpusError("dissimilarity matrix contains non-finite values")
    if np.any(np.abs(delta - delta.T) > _SYMMETRY_TOL):
        raise CorpusError("dissimilarity matrix is not symmetric")
    if np.any(delta < 0.0) or np.any(delta > 1.0):
        raise CorpusError("dissimilarities must lie in [0, 1]")
    if np.any(np.abs(np.diag(delta)) > _SYMMETRY_TOL):
        raise CorpusError("dissimilarity matrix must have a zero diagonal")
    return delta


def _pairwise_distances(points: np.ndarray) -> np.ndarray:
    diff = points[:, None, :] - points[None, :, :]
    return np.sqrt((diff**2).sum(axis=2))


def layout_stress(points: np.ndarray, delta: np.ndarray) -> float:
    """Sum over i<j of (layout distance - target)^2."""
    distances = _pairwise_distances(points)
    i, j = np.triu_indices(len(points), k=1)
    return float(((distances[i, j] - delta[i, j]) ** 2).sum())


def stress_majorization(
    delta: np.ndarray,
    iterations: int = 300,
    tolerance: float = 1e-9,
    seed: int = 42,
) -> tuple[np.ndarray, list[float]]:
    """Embed ``delta`` into 2D from a seeded random start.

    Returns (points, stress history); the history starts at the initial
    configuration's stress and is non-increasing.
    """
    delta = check_dissimilarities(delta)
    if iterations < 0:
        raise ValueError("iterations must be non-negative")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    n = len(delta)
    if n == 0:
        raise CorpusError("cannot lay out an empty matrix")
    if n == 1:
        return np.zeros((1, 2)), [0.0]

    rng = np.random.default_rng(seed)
    points = rng.uniform(-0.5, 0.5, size=(n, 2))
    history = [layout_stress(points, delta)]
    for _ in range(iterations):
        distances = _pairwise_distances(points)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(distances > 0.0, delta / distances, 0.0)
        b = -ratio
        np.fill_diagonal(b, ratio.sum(axis=1))
        candidate = b @ points / n
        stress = layout_stress(candidate, delta)
        previous = history[-1]
        if stress > previous:
            # majorization forbids a true increase; stop on float noise
            break
        points = candidate
        history.append(stress)
        if (previous - stress) <= tolerance * max(previous, 1e-300):
            break
    return points, history


class StressLayout(BaseEstimator):
    """Estimator interface over :func:`stress_majorization`.

    fit(delta) exposes ``embedding_`` (n x 2), ``stress_`` and the
    per-iteration ``stress_history_``.
    """

    def __init__(self, iterations: int = 300, tolerance: float = 1e-9, seed: int = 42):
        self.iterations = iterations
        self.tolerance = tolerance
        self.seed = seed

    def fit(self, delta: np.ndarray) -> "StressLayout":
        points, history = stress_majorization(
            delta, iterations=self.iterations, tolerance=self.tolerance, seed=self.seed
        )
        self.embedding_ = points
        self.stress_history_ = history
        self.stress_ = history[-1]
        return self

    def fit_transform(self, delta: np.ndarray) -> np.ndarray:
        return self.fit(delta).embedding_
