"""Hybrid inter-concept similarity.

Two concepts are similar when they label the same shots (Dice overlap of
their shot sets) and sit close together in the concept ontology (shortest
undirected path, counted in edges):

    sim(a, b) = (2 |E(a) & E(b)| / (|E(a)| + |E(b)|)) * 1 / (1 + dist(a, b))

Conventions: when both shot sets are empty the overlap factor is 0 (a
concept indexing nothing shares no information), and an unreachable pair
has similarity 0 (limit of the distance factor).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from sklearn.base import BaseEstimator

from .errors import UnknownItemError
from .model import ConceptId, CorpusIndex, Ontology

#: Distance reported when no path joins two concepts.
UNREACHABLE = math.inf


def rada_distance(ontology: Ontology, ci: ConceptId, cj: ConceptId) -> float:
    """Shortest-path length in edges between two ontology nodes.

    Returns 0 for identical concepts and UNREACHABLE when the pair lies in
    different components.
    """
    for node in (ci, cj):
        if node not in ontology:
            raise UnknownItemError(f"unknown ontology node {node}")
    if ci == cj:
        return 0
    seen = {ci}
    frontier = deque([(ci, 0)])
    while frontier:
        node, depth = frontier.popleft()
        for neighbor in ontology.neighbors(node):
            if neighbor == cj:
                return depth + 1
            if neighbor not in seen:
                seen.add(neighbor)
                frontier.append((neighbor, depth + 1))
    return UNREACHABLE


def dice_overlap(index: CorpusIndex, ci: ConceptId, cj: ConceptId) -> float:
    """Dice coefficient of the two concepts' shot sets; 0 when both empty."""
    shots_i = index.shots_indexed_by(ci)
    shots_j = index.shots_indexed_by(cj)
    total = len(shots_i) + len(shots_j)
    if total == 0:
        return 0.0
    return 2.0 * len(shots_i & shots_j) / total


def concept_similarity(
    index: CorpusIndex, ontology: Ontology, ci: ConceptId, cj: ConceptId
) -> float:
    dice = dice_overlap(index, ci, cj)
    distance = rada_distance(ontology, ci, cj)
    if distance == UNREACHABLE:
        return 0.0
    return dice / (1.0 + distance)


@dataclass(frozen=True)
class ConceptNeighborhood:
    """Concepts most similar to a center, strongest first."""

    center: ConceptId
    neighbors: tuple[tuple[ConceptId, float], ...]


class SimilarityMatrix:
    """Dense symmetric matrix of pairwise concept similarities.

    Concept ids are kept in ascending order so the matrix is canonical for
    a given corpus regardless of declaration order.
    """

    def __init__(self, concept_ids: Iterable[ConceptId], values: np.ndarray):
        self.concept_ids: tuple[ConceptId, ...] = tuple(concept_ids)
        self.values = np.asarray(values, dtype=float)
        if self.values.shape != (len(self.concept_ids), len(self.concept_ids)):
            raise ValueError("similarity matrix shape does not match concept ids")
        self._position = {cid: i for i, cid in enumerate(self.concept_ids)}

    def _index(self, cid: ConceptId) -> int:
        try:
            return self._position[cid]
        except KeyError:
            raise UnknownItemError(f"unknown concept {cid}") from None

    def value(self, ci: ConceptId, cj: ConceptId) -> float:
        return float(self.values[self._index(ci), self._index(cj)])

    def __contains__(self, cid: ConceptId) -> bool:
        return cid in self._position

    def to_csv(self) -> str:
        """Header row of concept ids, then value rows at 6 decimal places."""
        lines = [",".join(str(cid) for cid in self.concept_ids)]
        for row in self.values:
            lines.append(",".join(f"{v:.6f}" for v in row))
        return "\n".join(lines) + "\n"


def similarity_matrix(index: CorpusIndex, ontology: Ontology) -> SimilarityMatrix:
    """All pairwise similarities; upper triangle computed, then mirrored."""
    concept_ids = sorted(index.concept_ids)
    n = len(concept_ids)
    shot_sets = {cid: index.shots_indexed_by(cid) for cid in concept_ids}
    values = np.zeros((n, n))
    for i, ci in enumerate(concept_ids):
        for j in range(i, n):
            cj = concept_ids[j]
            shots_i, shots_j = shot_sets[ci], shot_sets[cj]
            total = len(shots_i) + len(shots_j)
            dice = 2.0 * len(shots_i & shots_j) / total if total else 0.0
            distance = rada_distance(ontology, ci, cj)
            sim = 0.0 if distance == UNREACHABLE else dice / (1.0 + distance)
            values[i, j] = sim
            values[j, i] = sim
    return SimilarityMatrix(concept_ids, values)


def similar_concepts(
    matrix: SimilarityMatrix,
    center: ConceptId,
    threshold: float = 0.0,
    limit: int | None = None,
) -> ConceptNeighborhood:
    """Neighbors with similarity >= threshold, similarity descending, ties
    broken by ascending concept id, at most ``limit`` entries."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")
    row = matrix.values[matrix._index(center)]
    candidates = [
        (cid, float(sim))
        for cid, sim in zip(matrix.concept_ids, row)
        if cid != center and sim >= threshold
    ]
    candidates.sort(key=lambda pair: (-pair[1], pair[0]))
    if limit is not None:
        candidates = candidates[:limit]
    return ConceptNeighborhood(center=center, neighbors=tuple(candidates))


class ConceptSimilarity(BaseEstimator):
    """Estimator wrapper around :func:`similarity_matrix`.

    fit(index, ontology) materializes the matrix as ``matrix_``; queries
    read the fitted matrix rather than recompute.
    """

    def fit(self, index: CorpusIndex, ontology: Ontology) -> "ConceptSimilarity":
        self.matrix_ = similarity_matrix(index, ontology)
        return self

    def pair(self, ci: ConceptId, cj: ConceptId) -> float:
        return self.matrix_.value(ci, cj)

    def neighbors(
        self, center: ConceptId, threshold: float = 0.0, limit: int | None = None
    ) -> ConceptNeighborhood:
        return similar_concepts(self.matrix_, center, threshold, limit)
