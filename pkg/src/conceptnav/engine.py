"""Engine assembly: load the three artifacts, precompute every derived
table once, and serialize the whole bundle as a deterministic cache file.

The cache is canonical JSON (sorted keys, no timestamps), so re-running
ingestion over unchanged inputs reproduces it byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path

import numpy as np

from .corpus_io import parse_contexts_xml, parse_corpus_index, parse_ontology
from .errors import CorpusError
from .model import Concept, Context, ContextMember, CorpusIndex, Ontology, Shot, Video
from .navigation import NavigationSettings, Navigator
from .similarity import SimilarityMatrix, similarity_matrix
from .weighting import (
    SimilarScope,
    WeightCell,
    WeightParams,
    WeightTable,
    build_weight_table,
)

CACHE_FORMAT = "conceptnav-cache/1"


@dataclass(frozen=True)
class EngineConfig:
    sim_threshold: float = 0.1
    similar_scope: str = SimilarScope.WITHIN_VIDEO.value
    panel_limit: int = 10
    font_min: float = 12.0
    font_max: float = 36.0
    relevant_boost: float = 1.5
    nonrelevant_damp: float = 0.5
    layout_iterations: int = 300
    layout_tolerance: float = 1e-9
    seed: int = 42

    def weight_params(self) -> WeightParams:
        return WeightParams(
            sim_threshold=self.sim_threshold,
            similar_scope=SimilarScope(self.similar_scope),
        )

    def navigation_settings(self) -> NavigationSettings:
        return NavigationSettings(
            sim_threshold=self.sim_threshold,
            panel_limit=self.panel_limit,
            font_min=self.font_min,
            font_max=self.font_max,
            relevant_boost=self.relevant_boost,
            nonrelevant_damp=self.nonrelevant_damp,
            layout_iterations=self.layout_iterations,
            layout_tolerance=self.layout_tolerance,
            seed=self.seed,
        )


class Engine:
    """Immutable bundle of corpus, ontology and precomputed tables."""

    def __init__(
        self,
        corpus: CorpusIndex,
        ontology: Ontology,
        matrix: SimilarityMatrix,
        table: WeightTable,
        config: EngineConfig,
    ):
        self.corpus = corpus
        self.ontology = ontology
        self.matrix = matrix
        self.table = table
        self.config = config

    @classmethod
    def build(
        cls,
        corpus: CorpusIndex,
        ontology: Ontology,
        contexts: list[Context] | None = None,
        config: EngineConfig | None = None,
    ) -> "Engine":
        config = config or EngineConfig()
        if contexts is not None:
            corpus = corpus.with_contexts(contexts)
        unknown = ontology.nodes - set(corpus.concept_ids)
        if unknown:
            raise CorpusError(
                f"ontology references concepts missing from the corpus: {sorted(unknown)}"
            )
        ontology = ontology.with_nodes(corpus.concept_ids)
        matrix = similarity_matrix(corpus, ontology)
        table = build_weight_table(corpus, matrix, config.weight_params())
        return cls(corpus, ontology, matrix, table, config)

    @classmethod
    def from_paths(
        cls,
        index_path: str | Path,
        ontology_path: str | Path,
        contexts_path: str | Path,
        config: EngineConfig | None = None,
    ) -> "Engine":
        corpus = parse_corpus_index(Path(index_path).read_text(encoding="utf-8"))
        ontology = parse_ontology(
            Path(ontology_path).read_text(encoding="utf-8"), concepts=corpus.concept_ids
        )
        contexts = parse_contexts_xml(Path(contexts_path).read_text(encoding="utf-8"))
        return cls.build(corpus, ontology, contexts, config)

    def navigator(self) -> Navigator:
        return Navigator(
            self.corpus, self.matrix, self.table, self.config.navigation_settings()
        )

    # -- cache serialization ------------------------------------------------

    def to_cache_json(self) -> str:
        payload = {
            "format": CACHE_FORMAT,
            "config": {
                "simThreshold": self.config.sim_threshold,
                "similarScope": self.config.similar_scope,
                "panelLimit": self.config.panel_limit,
                "fontMin": self.config.font_min,
                "fontMax": self.config.font_max,
                "relevantBoost": self.config.relevant_boost,
                "nonrelevantDamp": self.config.nonrelevant_damp,
                "layoutIterations": self.config.layout_iterations,
                "layoutTolerance": self.config.layout_tolerance,
                "seed": self.config.seed,
            },
            "concepts": [
                {"id": c.id, "name": c.name} for c in self.corpus.concepts
            ],
            "videos": [
                {
                    "id": v.id,
                    "title": v.title,
                    "shots": [sorted(s.concepts) for s in v.shots],
                }
                for v in self.corpus.videos
            ],
            "contexts": [
                {
                    "num": ctx.num,
                    "name": ctx.name,
                    "declared": ctx.declared_count,
                    "members": [
                        {
                            "id": m.concept_id,
                            "name": m.concept_name,
                            "weight": str(m.weight),
                        }
                        for m in ctx.members
                    ],
                }
                for ctx in self.corpus.contexts
            ],
            "ontology": {
                "nodes": sorted(self.ontology.nodes),
                "edges": sorted(list(edge) for edge in self.ontology.edges),
            },
            "similarity": {
                "conceptIds": list(self.matrix.concept_ids),
                "values": self.matrix.values.tolist(),
            },
            "weights": [
                {
                    "conceptId": ci,
                    "videoId": vid,
                    "p1": cell.p1,
                    "p2": cell.p2,
                    "p": cell.p,
                }
                for ci, vid, cell in self.table.iter_cells()
            ],
        }
        return json.dumps(payload, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"

    def write_cache(self, path: str | Path) -> None:
        Path(path).write_text(self.to_cache_json(), encoding="utf-8")

    @classmethod
    def from_cache(cls, path: str | Path) -> "Engine":
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise CorpusError(f"cache {path}: invalid JSON: {exc.msg}") from exc
        if payload.get("format") != CACHE_FORMAT:
            raise CorpusError(f"cache {path}: unsupported format {payload.get('format')!r}")
        raw_config = payload["config"]
        config = EngineConfig(
            sim_threshold=raw_config["simThreshold"],
            similar_scope=raw_config["similarScope"],
            panel_limit=raw_config["panelLimit"],
            font_min=raw_config["fontMin"],
            font_max=raw_config["fontMax"],
            relevant_boost=raw_config["relevantBoost"],
            nonrelevant_damp=raw_config["nonrelevantDamp"],
            layout_iterations=raw_config["layoutIterations"],
            layout_tolerance=raw_config["layoutTolerance"],
            seed=raw_config["seed"],
        )
        concepts = [Concept(c["id"], c["name"]) for c in payload["concepts"]]
        videos = [
            Video(
                id=v["id"],
                title=v["title"],
                shots=tuple(
                    Shot(v["id"], i, frozenset(cids)) for i, cids in enumerate(v["shots"])
                ),
            )
            for v in payload["videos"]
        ]
        contexts = [
            Context(
                num=ctx["num"],
                name=ctx["name"],
                declared_count=ctx["declared"],
                members=tuple(
                    ContextMember(m["id"], m["name"], Fraction(m["weight"]))
                    for m in ctx["members"]
                ),
            )
            for ctx in payload["contexts"]
        ]
        corpus = CorpusIndex(concepts, videos, contexts)
        ontology = Ontology(
            payload["ontology"]["nodes"],
            [tuple(edge) for edge in payload["ontology"]["edges"]],
        )
        matrix = SimilarityMatrix(
            payload["similarity"]["conceptIds"],
            np.array(payload["similarity"]["values"], dtype=float),
        )
        cells = {
            (w["conceptId"], w["videoId"]): WeightCell(w["p1"], w["p2"], w["p"])
            for w in payload["weights"]
        }
        table = WeightTable(
            concept_ids=tuple(sorted(corpus.concept_ids)),
            video_ids=tuple(sorted(corpus.video_ids)),
            cells=cells,
        )
        return cls(corpus, ontology, matrix, table, config)

    def with_config(self, **changes) -> "EngineConfig":
        return replace(self.config, **changes)
