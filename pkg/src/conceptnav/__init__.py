"""Concept-indexed video retrieval and navigation engine."""

from .engine import Engine, EngineConfig
from .errors import CorpusError, InvalidTransitionError, UnknownItemError
from .model import Concept, Context, ContextMember, CorpusIndex, Ontology, Shot, Video
from .navigation import (
    CloudEntry,
    Layout2D,
    Level,
    NavigationSettings,
    Navigator,
    Session,
    tag_cloud_sizes,
)
from .similarity import (
    UNREACHABLE,
    ConceptNeighborhood,
    ConceptSimilarity,
    SimilarityMatrix,
    concept_similarity,
    dice_overlap,
    rada_distance,
    similar_concepts,
    similarity_matrix,
)
from .weighting import (
    SimilarScope,
    VideoWeighter,
    WeightParams,
    WeightTable,
    build_weight_table,
    concept_discriminance,
    concept_pertinence,
    concept_video_weight,
    rank_videos_for_concept,
    shot_frequency,
    video_similarity,
)
from .layout import StressLayout, layout_stress, stress_majorization

__version__ = "0.1.0"

__all__ = [
    "Concept",
    "ConceptNeighborhood",
    "ConceptSimilarity",
    "CloudEntry",
    "Context",
    "ContextMember",
    "CorpusError",
    "CorpusIndex",
    "Engine",
    "EngineConfig",
    "InvalidTransitionError",
    "Layout2D",
    "Level",
    "NavigationSettings",
    "Navigator",
    "Ontology",
    "Session",
    "Shot",
    "SimilarScope",
    "SimilarityMatrix",
    "StressLayout",
    "UNREACHABLE",
    "UnknownItemError",
    "Video",
    "VideoWeighter",
    "WeightParams",
    "WeightTable",
    "build_weight_table",
    "concept_discriminance",
    "concept_pertinence",
    "concept_similarity",
    "concept_video_weight",
    "dice_overlap",
    "layout_stress",
    "rada_distance",
    "rank_videos_for_concept",
    "shot_frequency",
    "similar_concepts",
    "similarity_matrix",
    "stress_majorization",
    "tag_cloud_sizes",
    "video_similarity",
]
