"""Three-level navigation sessions: contexts -> concept cloud -> videos.

A session walks down the corpus structure, carries per-video relevance
feedback factors, and keeps a history stack so every selection can be
undone. All scoring comes from the precomputed similarity matrix and
weight table; the session only combines and orders it.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from .errors import InvalidTransitionError, UnknownItemError
from .layout import stress_majorization
from .model import ConceptId, CorpusIndex
from .similarity import ConceptNeighborhood, SimilarityMatrix, similar_concepts
from .weighting import WeightTable, concept_pertinence, rank_videos_for_concept, video_similarity


class Level(Enum):
    CONTEXTS = "CONTEXTS"
    CONCEPTS = "CONCEPTS"
    VIDEOS = "VIDEOS"


@dataclass(frozen=True)
class CloudEntry:
    concept_id: ConceptId
    pertinence: float
    font_size: float


@dataclass(frozen=True)
class Layout2D:
    points: dict[str, tuple[float, float]]
    stress: float


@dataclass(frozen=True)
class HistoryEntry:
    level: Level
    selected_context: int | None
    selected_concept: ConceptId | None


@dataclass
class Session:
    """One user's navigation state. Mutated only through a Navigator."""

    id: str
    level: Level = Level.CONTEXTS
    selected_context: int | None = None
    selected_concept: ConceptId | None = None
    feedback_factors: dict[str, float] = field(default_factory=dict)
    history: list[HistoryEntry] = field(default_factory=list)
    focus: int = 0

    def factor(self, video_id: str) -> float:
        return self.feedback_factors.get(video_id, 1.0)


def tag_cloud_sizes(
    pertinences: Mapping[ConceptId, float],
    font_min: float = 12.0,
    font_max: float = 36.0,
) -> list[CloudEntry]:
    """Map pertinences linearly onto [font_min, font_max]; a degenerate
    (all-equal) spread maps to the midpoint."""
    if not pertinences:
        raise ValueError("cannot size an empty tag cloud")
    if font_min > font_max:
        raise ValueError(f"font_min {font_min} exceeds font_max {font_max}")
    low = min(pertinences.values())
    high = max(pertinences.values())
    entries = []
    for cid, pertinence in pertinences.items():
        if high == low:
            size = (font_min + font_max) / 2.0
        else:
            size = font_min + (pertinence - low) / (high - low) * (font_max - font_min)
        entries.append(CloudEntry(concept_id=cid, pertinence=pertinence, font_size=size))
    return entries


@dataclass(frozen=True)
class NavigationSettings:
    sim_threshold: float = 0.1
    panel_limit: int = 10
    font_min: float = 12.0
    font_max: float = 36.0
    relevant_boost: float = 1.5
    nonrelevant_damp: float = 0.5
    layout_iterations: int = 300
    layout_tolerance: float = 1e-9
    seed: int = 42


class Navigator:
    """Executes navigation commands against one corpus and its tables.

    Sessions are single-writer; distinct sessions share the navigator's
    immutable corpus, matrix and table freely.
    """

    def __init__(
        self,
        corpus: CorpusIndex,
        matrix: SimilarityMatrix,
        table: WeightTable,
        settings: NavigationSettings | None = None,
    ):
        self.corpus = corpus
        self.matrix = matrix
        self.table = table
        self.settings = settings or NavigationSettings()

    # -- session lifecycle -------------------------------------------------

    def start_session(self) -> Session:
        return Session(id=uuid.uuid4().hex)

    # -- level transitions -------------------------------------------------

    def select_context(self, session: Session, num: int) -> list[CloudEntry]:
        context = self.corpus.context(num)
        if session.level not in (Level.CONTEXTS, Level.CONCEPTS):
            raise InvalidTransitionError(
                f"cannot select a context at level {session.level.value}"
            )
        already_there = (
            session.level is Level.CONCEPTS
            and session.selected_context == context.num
            and session.selected_concept is None
        )
        if not already_there:
            # re-selecting the current state is a refresh, not a step;
            # history must never hold the current state
            self._push(session)
        session.level = Level.CONCEPTS
        session.selected_context = context.num
        session.selected_concept = None
        session.focus = 0
        return self.cloud(session)

    def select_concept(
        self, session: Session, cid: ConceptId
    ) -> tuple[list[tuple[str, float]], ConceptNeighborhood]:
        if session.level not in (Level.CONCEPTS, Level.VIDEOS):
            raise InvalidTransitionError(
                f"cannot select a concept at level {session.level.value}"
            )
        if not self.corpus.has_concept(cid):
            raise UnknownItemError(f"unknown concept {cid}")
        if cid not in self._selectable_concepts(session):
            raise InvalidTransitionError(
                f"concept {cid} is neither in the selected context nor in the similar panel"
            )
        already_there = session.level is Level.VIDEOS and session.selected_concept == cid
        if not already_there:
            self._push(session)
        session.level = Level.VIDEOS
        session.selected_concept = cid
        session.focus = 0
        return self.ranking(session), self.similar_panel(cid)

    def back(self, session: Session) -> Session:
        if not session.history:
            raise InvalidTransitionError("at root: no history to go back to")
        entry = session.history.pop()
        session.level = entry.level
        session.selected_context = entry.selected_context
        session.selected_concept = entry.selected_concept
        session.focus = 0
        return session

    def goto_contexts(self, session: Session) -> Session:
        while session.history:
            self.back(session)
        return session

    def _push(self, session: Session) -> None:
        session.history.append(
            HistoryEntry(session.level, session.selected_context, session.selected_concept)
        )

    def _selectable_concepts(self, session: Session) -> set[ConceptId]:
        allowed: set[ConceptId] = set()
        if session.selected_context is not None:
            allowed |= set(self.corpus.context(session.selected_context).member_ids)
        if session.selected_concept is not None:
            allowed.add(session.selected_concept)  # re-select is a refresh
            allowed |= {cid for cid, _ in self.similar_panel(session.selected_concept).neighbors}
        return allowed

    # -- views over the current state ---------------------------------------

    def cloud(self, session: Session) -> list[CloudEntry]:
        if session.selected_context is None:
            raise InvalidTransitionError("no context selected")
        context = self.corpus.context(session.selected_context)
        if not context.members:
            return []
        pertinences = {
            cid: concept_pertinence(self.table, cid) for cid in context.member_ids
        }
        return tag_cloud_sizes(pertinences, self.settings.font_min, self.settings.font_max)

    def similar_panel(self, cid: ConceptId) -> ConceptNeighborhood:
        return similar_concepts(
            self.matrix, cid, self.settings.sim_threshold, self.settings.panel_limit
        )

    def ranking(self, session: Session) -> list[tuple[str, float]]:
        """Current ranking: base weights scaled by the session's feedback."""
        if session.selected_concept is None:
            raise InvalidTransitionError("no concept selected")
        adjusted = [
            (vid, weight * session.factor(vid))
            for vid, weight in rank_videos_for_concept(self.table, session.selected_concept)
        ]
        adjusted.sort(key=lambda pair: (-pair[1], pair[0]))
        return adjusted

    def text_query(self, session: Session, needle: str) -> list[ConceptId]:
        """Concept ids whose name contains the needle, best pertinence first."""
        if not needle:
            raise ValueError("query text must be non-empty")
        fold = needle.casefold()
        hits = [c.id for c in self.corpus.concepts if fold in c.name.casefold()]
        hits.sort(key=lambda cid: (-concept_pertinence(self.table, cid), cid))
        return hits

    def video_map(self, session: Session) -> Layout2D:
        """2D layout of the ranked videos, dissimilarity = 1 - similarity."""
        if session.level is not Level.VIDEOS:
            raise InvalidTransitionError(f"no video map at level {session.level.value}")
        ranked = [vid for vid, _ in self.ranking(session)]
        if not ranked:
            raise InvalidTransitionError("ranking is empty, nothing to lay out")
        n = len(ranked)
        delta = np.zeros((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                value = 1.0 - video_similarity(self.table, ranked[i], ranked[j])
                value = min(max(value, 0.0), 1.0)
                delta[i, j] = value
                delta[j, i] = value
        points, history = stress_majorization(
            delta,
            iterations=self.settings.layout_iterations,
            tolerance=self.settings.layout_tolerance,
            seed=self.settings.seed,
        )
        return Layout2D(
            points={vid: (float(x), float(y)) for vid, (x, y) in zip(ranked, points)},
            stress=history[-1],
        )

    def apply_feedback(
        self,
        session: Session,
        relevant: set[str],
        non_relevant: set[str],
    ) -> list[tuple[str, float]]:
        if session.level is not Level.VIDEOS:
            raise InvalidTransitionError(
                f"feedback applies at level VIDEOS, not {session.level.value}"
            )
        overlap = set(relevant) & set(non_relevant)
        if overlap:
            raise ValueError(f"videos marked both relevant and non-relevant: {sorted(overlap)}")
        for vid in list(relevant) + list(non_relevant):
            if not self.corpus.has_video(vid):
                raise UnknownItemError(f"unknown video {vid!r}")
        for vid in relevant:
            session.feedback_factors[vid] = session.factor(vid) * self.settings.relevant_boost
        for vid in non_relevant:
            session.feedback_factors[vid] = session.factor(vid) * self.settings.nonrelevant_damp
        return self.ranking(session)

    # -- focus cursor support ------------------------------------------------

    def items(self, session: Session) -> Sequence[int] | Sequence[str]:
        """The ordered item list the focus cursor moves over at this level."""
        if session.level is Level.CONTEXTS:
            return [c.num for c in self.corpus.contexts]
        if session.level is Level.CONCEPTS:
            assert session.selected_context is not None
            return list(self.corpus.context(session.selected_context).member_ids)
        return [vid for vid, _ in self.ranking(session)]

    def focused_item(self, session: Session) -> int | str | None:
        items = self.items(session)
        if not items:
            return None
        return items[min(session.focus, len(items) - 1)]
