import pytest

from conceptnav.errors import CorpusError, UnknownItemError
from conceptnav.model import (
    Concept,
    Context,
    ContextMember,
    CorpusIndex,
    Ontology,
    Shot,
    Video,
)


def video(vid, shot_labels, title=""):
    return Video(
        id=vid,
        title=title or vid,
        shots=tuple(
            Shot(vid, i, frozenset(labels)) for i, labels in enumerate(shot_labels)
        ),
    )


class TestTypes:
    def test_concept_requires_positive_id_and_name(self):
        with pytest.raises(CorpusError):
            Concept(0, "Birds")
        with pytest.raises(CorpusError):
            Concept(3, "")

    def test_context_count_mismatch_rejected(self):
        members = (
            ContextMember(14, "Birds", 1),
            ContextMember(23, "Cats", 1),
        )
        with pytest.raises(CorpusError, match="declares 3"):
            Context(num=6, name="Animal", declared_count=3, members=members)

    def test_context_without_members_keeps_declared_count(self):
        context = Context(num=2, name="Adult", declared_count=6)
        assert context.declared_count == 6
        assert context.members == ()

    def test_context_duplicate_member_rejected(self):
        members = (
            ContextMember(14, "Birds", 1),
            ContextMember(14, "Birds", 1),
        )
        with pytest.raises(CorpusError, match="repeats"):
            Context(num=6, name="Animal", declared_count=2, members=members)

    def test_video_must_have_shots(self):
        with pytest.raises(CorpusError, match="no shots"):
            Video(id="v1", title="t", shots=())

    def test_video_shot_indexes_contiguous(self):
        shots = (Shot("v1", 0, frozenset()), Shot("v1", 2, frozenset()))
        with pytest.raises(CorpusError, match="non-contiguous"):
            Video(id="v1", title="t", shots=shots)

    def test_ontology_rejects_self_loop(self):
        with pytest.raises(CorpusError, match="self-loop"):
            Ontology([1, 2], [(1, 1)])

    def test_ontology_deduplicates_undirected_edges(self):
        onto = Ontology([1, 2], [(1, 2), (2, 1)])
        assert onto.edges == frozenset({(1, 2)})


class TestCorpusIndex:
    def test_unknown_shot_concept_named_in_error(self):
        concepts = [Concept(14, "Birds")]
        bad = video("v1", [[14], [99]])
        with pytest.raises(CorpusError, match="unknown concept 99 in video v1 shot 1"):
            CorpusIndex(concepts, [bad])

    def test_duplicate_video_id_rejected(self):
        concepts = [Concept(14, "Birds")]
        with pytest.raises(CorpusError, match="duplicate video"):
            CorpusIndex(concepts, [video("v1", [[14]]), video("v1", [[]])])

    def test_duplicate_concept_name_rejected(self):
        with pytest.raises(CorpusError, match="duplicate concept name"):
            CorpusIndex([Concept(1, "Birds"), Concept(2, "Birds")], [])

    def test_context_member_must_exist(self):
        ctx = Context(
            num=6, name="Animal", declared_count=1,
            members=(ContextMember(99, "Ghost", 1),),
        )
        with pytest.raises(CorpusError, match="unknown concept 99"):
            CorpusIndex([Concept(14, "Birds")], [video("v1", [[14]])], [ctx])

    def test_shots_indexed_by(self):
        concepts = [Concept(14, "Birds"), Concept(23, "Cats")]
        corpus = CorpusIndex(
            concepts,
            [video("v1", [[14], []]), video("v2", [[23], [], [], [14]])],
        )
        assert corpus.shots_indexed_by(14) == {("v1", 0), ("v2", 3)}
        assert corpus.shots_indexed_by(23) == {("v2", 0)}
        with pytest.raises(UnknownItemError):
            corpus.shots_indexed_by(99)

    def test_shots_indexed_by_covers_every_labelled_shot(self, desk_engine):
        corpus = desk_engine.corpus
        union = set()
        for cid in corpus.concept_ids:
            union |= corpus.shots_indexed_by(cid)
        brute = {
            (shot.video_id, shot.shot_index)
            for shot in corpus.iter_shots()
            if shot.concepts
        }
        assert union == brute

    def test_intersections_match_pairwise_scan(self, desk_engine):
        corpus = desk_engine.corpus
        for ci in corpus.concept_ids:
            for cj in corpus.concept_ids:
                fast = corpus.shots_indexed_by(ci) & corpus.shots_indexed_by(cj)
                slow = {
                    (shot.video_id, shot.shot_index)
                    for shot in corpus.iter_shots()
                    if ci in shot.concepts and cj in shot.concepts
                }
                assert fast == slow
