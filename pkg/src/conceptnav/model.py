"""Domain model for a shot-level, concept-indexed video corpus.

A corpus is organized on three levels: named contexts group concepts,
concepts label individual video shots. All types are immutable once
constructed and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import CorpusError, UnknownItemError

ConceptId = int


@dataclass(frozen=True)
class Concept:
    """A semantic label attached to video shots by a prior indexing stage."""

    id: ConceptId
    name: str

    def __post_init__(self) -> None:
        if self.id <= 0:
            raise CorpusError(f"concept id must be positive, got {self.id}")
        if not self.name:
            raise CorpusError(f"concept {self.id} has an empty name")


@dataclass(frozen=True)
class ContextMember:
    """One concept entry inside a context, with its carried weight.

    Weights are parsed and re-emitted verbatim as rationals; the ranking
    formulas do not consume them.
    """

    concept_id: ConceptId
    concept_name: str
    weight: Fraction

    def __post_init__(self) -> None:
        if self.weight < 0:
            raise CorpusError(
                f"negative weight {self.weight} for concept {self.concept_id}"
            )


@dataclass(frozen=True)
class Context:
    """A named grouping of concepts; the top navigation level.

    ``declared_count`` mirrors the source document's member-count attribute.
    Documents may carry a context header without enumerating its members
    (an excerpt); in that case ``members`` is empty and ``declared_count``
    is kept as documentation. A non-empty member list must match the
    declared count exactly.
    """

    num: int
    name: str
    declared_count: int
    members: tuple[ContextMember, ...] = ()

    def __post_init__(self) -> None:
        if self.num <= 0:
            raise CorpusError(f"context number must be positive, got {self.num}")
        if not self.name:
            raise CorpusError(f"context {self.num} has an empty name")
        if self.members and len(self.members) != self.declared_count:
            raise CorpusError(
                f"context {self.name!r} declares {self.declared_count} concepts "
                f"but lists {len(self.members)}"
            )
        ids = [m.concept_id for m in self.members]
        if len(set(ids)) != len(ids):
            raise CorpusError(f"context {self.name!r} repeats a concept id")

    @property
    def member_ids(self) -> tuple[ConceptId, ...]:
        return tuple(m.concept_id for m in self.members)


@dataclass(frozen=True)
class Shot:
    """A contiguous video segment; the indexing granularity."""

    video_id: str
    shot_index: int
    concepts: frozenset[ConceptId]


@dataclass(frozen=True)
class Video:
    id: str
    title: str
    shots: tuple[Shot, ...]

    def __post_init__(self) -> None:
        if not self.id:
            raise CorpusError("video with empty id")
        if not self.shots:
            raise CorpusError(f"video {self.id} has no shots")
        for i, shot in enumerate(self.shots):
            if shot.shot_index != i or shot.video_id != self.id:
                raise CorpusError(f"video {self.id} has non-contiguous shot indexes")

    @property
    def shot_count(self) -> int:
        return len(self.shots)

    def distinct_concepts(self) -> frozenset[ConceptId]:
        out: set[ConceptId] = set()
        for shot in self.shots:
            out |= shot.concepts
        return frozenset(out)


class Ontology:
    """Undirected concept graph; edge counts define the path distance."""

    def __init__(self, nodes: Iterable[ConceptId], edges: Iterable[tuple[ConceptId, ConceptId]]):
        node_set = set(nodes)
        edge_set: set[tuple[ConceptId, ConceptId]] = set()
        for a, b in edges:
            if a == b:
                raise CorpusError(f"self-loop on concept {a}")
            node_set.add(a)
            node_set.add(b)
            edge_set.add((min(a, b), max(a, b)))
        self._nodes = frozenset(node_set)
        self._edges = frozenset(edge_set)
        adjacency: dict[ConceptId, set[ConceptId]] = {n: set() for n in self._nodes}
        for a, b in self._edges:
            adjacency[a].add(b)
            adjacency[b].add(a)
        self._adjacency = {n: frozenset(vs) for n, vs in adjacency.items()}

    @property
    def nodes(self) -> frozenset[ConceptId]:
        return self._nodes

    @property
    def edges(self) -> frozenset[tuple[ConceptId, ConceptId]]:
        return self._edges

    def neighbors(self, node: ConceptId) -> frozenset[ConceptId]:
        try:
            return self._adjacency[node]
        except KeyError:
            raise UnknownItemError(f"unknown ontology node {node}") from None

    def with_nodes(self, extra: Iterable[ConceptId]) -> "Ontology":
        """A copy with additional (possibly isolated) nodes."""
        return Ontology(self._nodes | set(extra), self._edges)

    def __contains__(self, node: ConceptId) -> bool:
        return node in self._nodes

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Ontology)
            and self._nodes == other._nodes
            and self._edges == other._edges
        )

    def __repr__(self) -> str:
        return f"Ontology(nodes={len(self._nodes)}, edges={len(self._edges)})"


class CorpusIndex:
    """Validated corpus: concepts, videos with labelled shots, contexts.

    Every concept id referenced by a shot or a context member must be
    declared; video ids and concept names are unique. Lookup tables are
    precomputed so readers never mutate shared state.
    """

    def __init__(
        self,
        concepts: Iterable[Concept],
        videos: Iterable[Video],
        contexts: Iterable[Context] = (),
    ):
        self.concepts: tuple[Concept, ...] = tuple(concepts)
        self.videos: tuple[Video, ...] = tuple(videos)
        self.contexts: tuple[Context, ...] = tuple(contexts)

        self._concept_by_id: dict[ConceptId, Concept] = {}
        self._concept_by_name: dict[str, Concept] = {}
        for concept in self.concepts:
            if concept.id in self._concept_by_id:
                raise CorpusError(f"duplicate concept id {concept.id}")
            if concept.name in self._concept_by_name:
                raise CorpusError(f"duplicate concept name {concept.name!r}")
            self._concept_by_id[concept.id] = concept
            self._concept_by_name[concept.name] = concept

        self._video_by_id: dict[str, Video] = {}
        shots_by_concept: dict[ConceptId, set[tuple[str, int]]] = {
            cid: set() for cid in self._concept_by_id
        }
        for video in self.videos:
            if video.id in self._video_by_id:
                raise CorpusError(f"duplicate video id {video.id}")
            self._video_by_id[video.id] = video
            for shot in video.shots:
                for cid in shot.concepts:
                    if cid not in self._concept_by_id:
                        raise CorpusError(
                            f"unknown concept {cid} in video {video.id} shot {shot.shot_index}"
                        )
                    shots_by_concept[cid].add((video.id, shot.shot_index))
        self._shots_by_concept = {
            cid: frozenset(shots) for cid, shots in shots_by_concept.items()
        }

        nums = [c.num for c in self.contexts]
        if len(set(nums)) != len(nums):
            raise CorpusError("duplicate context number")
        for context in self.contexts:
            for member in context.members:
                if member.concept_id not in self._concept_by_id:
                    raise CorpusError(
                        f"unknown concept {member.concept_id} in context {context.name!r}"
                    )

    # -- lookups ---------------------------------------------------------

    def concept(self, cid: ConceptId) -> Concept:
        try:
            return self._concept_by_id[cid]
        except KeyError:
            raise UnknownItemError(f"unknown concept {cid}") from None

    def concept_by_name(self, name: str) -> Concept:
        try:
            return self._concept_by_name[name]
        except KeyError:
            raise UnknownItemError(f"unknown concept name {name!r}") from None

    def video(self, video_id: str) -> Video:
        try:
            return self._video_by_id[video_id]
        except KeyError:
            raise UnknownItemError(f"unknown video {video_id!r}") from None

    def context(self, num: int) -> Context:
        for context in self.contexts:
            if context.num == num:
                return context
        raise UnknownItemError(f"unknown context {num}")

    def has_concept(self, cid: ConceptId) -> bool:
        return cid in self._concept_by_id

    def has_video(self, video_id: str) -> bool:
        return video_id in self._video_by_id

    @property
    def concept_ids(self) -> tuple[ConceptId, ...]:
        return tuple(c.id for c in self.concepts)

    @property
    def video_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.videos)

    def shots_indexed_by(self, cid: ConceptId) -> frozenset[tuple[str, int]]:
        """All (video id, shot index) pairs whose shot carries ``cid``."""
        try:
            return self._shots_by_concept[cid]
        except KeyError:
            raise UnknownItemError(f"unknown concept {cid}") from None

    def iter_shots(self) -> Iterator[Shot]:
        for video in self.videos:
            yield from video.shots

    @property
    def shot_count(self) -> int:
        return sum(v.shot_count for v in self.videos)

    def with_contexts(self, contexts: Iterable[Context]) -> "CorpusIndex":
        return CorpusIndex(self.concepts, self.videos, contexts)
