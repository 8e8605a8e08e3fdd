"""Concept-in-video weighting and the rankings derived from it.

The weight of concept c in video v is a product of two factors:

    P(c, v) = P1 * P2
    P1 = shots of v labelled c / total shots of v
    P2 = similar-concept count of c / (distinct concepts of v * N)

where N is the number of videos containing c, and the similar-concept
count is the number of other concepts whose similarity to c reaches a
threshold. The counting scope is the video's own concepts by default
(making P2 video-dependent) or the whole corpus.

Degenerate cases are pinned to 0: a video whose shots carry no concepts,
and a concept appearing in no video.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from sklearn.base import BaseEstimator

from .errors import UnknownItemError
from .model import ConceptId, CorpusIndex
from .similarity import SimilarityMatrix


class SimilarScope(Enum):
    """Which concepts are counted against the similarity threshold."""

    WITHIN_VIDEO = "within_video"
    GLOBAL = "global"


@dataclass(frozen=True)
class WeightParams:
    sim_threshold: float = 0.1
    similar_scope: SimilarScope = SimilarScope.WITHIN_VIDEO

    def __post_init__(self) -> None:
        if not 0.0 <= self.sim_threshold <= 1.0:
            raise ValueError(f"sim_threshold must be in [0, 1], got {self.sim_threshold}")


def shot_frequency(index: CorpusIndex, ci: ConceptId, video_id: str) -> float:
    """P1: fraction of the video's shots labelled with the concept."""
    index.concept(ci)
    video = index.video(video_id)
    labelled = sum(1 for shot in video.shots if ci in shot.concepts)
    return labelled / video.shot_count


def containing_video_count(index: CorpusIndex, ci: ConceptId) -> int:
    """N: number of videos with at least one shot labelled ci."""
    return len({video_id for video_id, _ in index.shots_indexed_by(ci)})


def similar_concept_count(
    index: CorpusIndex,
    matrix: SimilarityMatrix,
    params: WeightParams,
    ci: ConceptId,
    video_id: str,
) -> int:
    """Concepts other than ci, in scope, whose similarity reaches the threshold."""
    if params.similar_scope is SimilarScope.WITHIN_VIDEO:
        scope: set[ConceptId] = set(index.video(video_id).distinct_concepts())
    else:
        scope = set(index.concept_ids)
    scope.discard(ci)
    return sum(1 for ck in scope if matrix.value(ci, ck) >= params.sim_threshold)


def concept_discriminance(
    index: CorpusIndex,
    matrix: SimilarityMatrix,
    params: WeightParams,
    ci: ConceptId,
    video_id: str,
) -> float:
    """P2; 0 when the video carries no concepts or ci appears nowhere."""
    index.concept(ci)
    video = index.video(video_id)
    video_concepts = len(video.distinct_concepts())
    containing = containing_video_count(index, ci)
    if video_concepts == 0 or containing == 0:
        return 0.0
    similar = similar_concept_count(index, matrix, params, ci, video_id)
    return similar / (video_concepts * containing)


def concept_video_weight(
    index: CorpusIndex,
    matrix: SimilarityMatrix,
    params: WeightParams,
    ci: ConceptId,
    video_id: str,
) -> float:
    """P = P1 * P2."""
    return shot_frequency(index, ci, video_id) * concept_discriminance(
        index, matrix, params, ci, video_id
    )


@dataclass(frozen=True)
class WeightCell:
    p1: float
    p2: float
    p: float


class WeightTable:
    """All (concept, video) weights; cells are stored only where the
    concept labels at least one shot of the video, everything else is 0."""

    def __init__(
        self,
        concept_ids: tuple[ConceptId, ...],
        video_ids: tuple[str, ...],
        cells: dict[tuple[ConceptId, str], WeightCell],
    ):
        self.concept_ids = concept_ids
        self.video_ids = video_ids
        self._concepts = set(concept_ids)
        self._videos = set(video_ids)
        self._cells = cells

    def _check_concept(self, ci: ConceptId) -> None:
        if ci not in self._concepts:
            raise UnknownItemError(f"unknown concept {ci}")

    def _check_video(self, video_id: str) -> None:
        if video_id not in self._videos:
            raise UnknownItemError(f"unknown video {video_id!r}")

    def cell(self, ci: ConceptId, video_id: str) -> WeightCell:
        self._check_concept(ci)
        self._check_video(video_id)
        return self._cells.get((ci, video_id), WeightCell(0.0, 0.0, 0.0))

    def weight(self, ci: ConceptId, video_id: str) -> float:
        return self.cell(ci, video_id).p

    def video_vector(self, video_id: str) -> dict[ConceptId, float]:
        """Non-zero weight components of one video."""
        self._check_video(video_id)
        return {
            ci: cell.p
            for (ci, vid), cell in self._cells.items()
            if vid == video_id and cell.p > 0.0
        }

    def iter_cells(self) -> Iterator[tuple[ConceptId, str, WeightCell]]:
        """Stored cells in (concept id, video id) order."""
        for (ci, vid) in sorted(self._cells):
            yield ci, vid, self._cells[(ci, vid)]

    def to_csv(self) -> str:
        lines = ["concept_id,video_id,p1,p2,p"]
        for ci, vid, cell in self.iter_cells():
            lines.append(f"{ci},{vid},{cell.p1:.6f},{cell.p2:.6f},{cell.p:.6f}")
        return "\n".join(lines) + "\n"


def build_weight_table(
    index: CorpusIndex, matrix: SimilarityMatrix, params: WeightParams | None = None
) -> WeightTable:
    params = params or WeightParams()
    cells: dict[tuple[ConceptId, str], WeightCell] = {}
    for video in index.videos:
        video_concepts = video.distinct_concepts()
        for ci in video_concepts:
            p1 = shot_frequency(index, ci, video.id)
            p2 = concept_discriminance(index, matrix, params, ci, video.id)
            cells[(ci, video.id)] = WeightCell(p1=p1, p2=p2, p=p1 * p2)
    return WeightTable(
        concept_ids=tuple(sorted(index.concept_ids)),
        video_ids=tuple(sorted(index.video_ids)),
        cells=cells,
    )


def rank_videos_for_concept(table: WeightTable, ci: ConceptId) -> list[tuple[str, float]]:
    """Videos with positive weight, heaviest first, ties by ascending id."""
    table._check_concept(ci)
    ranked = [
        (vid, cell.p)
        for (cid, vid), cell in table._cells.items()
        if cid == ci and cell.p > 0.0
    ]
    ranked.sort(key=lambda pair: (-pair[1], pair[0]))
    return ranked


def concept_pertinence(table: WeightTable, ci: ConceptId) -> float:
    """Corpus-level pertinence: sum of the concept's weights over videos."""
    table._check_concept(ci)
    return sum(cell.p for (cid, _), cell in table._cells.items() if cid == ci)


def video_similarity(table: WeightTable, vi: str, vj: str) -> float:
    """Cosine of the two videos' weight vectors; 0 when either is all-zero."""
    a = table.video_vector(vi)
    b = table.video_vector(vj)
    if not a or not b:
        return 0.0
    dot = sum(value * b.get(cid, 0.0) for cid, value in a.items())
    norm_a = math.sqrt(sum(value * value for value in a.values()))
    norm_b = math.sqrt(sum(value * value for value in b.values()))
    return dot / (norm_a * norm_b)


class VideoWeighter(BaseEstimator):
    """Estimator wrapper around :func:`build_weight_table`.

    Parameters mirror WeightParams; ``similar_scope`` takes the enum's
    string value. fit(index, matrix) materializes ``table_``.
    """

    def __init__(self, sim_threshold: float = 0.1, similar_scope: str = "within_video"):
        self.sim_threshold = sim_threshold
        self.similar_scope = similar_scope

    def _params(self) -> WeightParams:
        return WeightParams(
            sim_threshold=self.sim_threshold,
            similar_scope=SimilarScope(self.similar_scope),
        )

    def fit(self, index: CorpusIndex, matrix: SimilarityMatrix) -> "VideoWeighter":
        self.table_ = build_weight_table(index, matrix, self._params())
        return self

    def rank(self, ci: ConceptId) -> list[tuple[str, float]]:
        return rank_videos_for_concept(self.table_, ci)

    def pertinence(self, ci: ConceptId) -> float:
        return concept_pertinence(self.table_, ci)

    def video_similarity(self, vi: str, vj: str) -> float:
        return video_similarity(self.table_, vi, vj)
