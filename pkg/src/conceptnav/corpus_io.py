"""Parsers and emitters for the three corpus artifacts.

Formats:

* Contexts: XML, root ``contextes``, elements ``Contexte`` (attributes
  ``Num``, ``Name``, ``Nbrconcept``) containing ``concept`` children
  (attributes ``ConceptId``, ``ConceptName``, ``Weight``).
* Corpus index: JSON lines, one object per line, either
  ``{"concept": {"id": 14, "name": "Birds"}}`` or
  ``{"video": {"id": "v1", "title": "...", "shots": [[14, 23], []]}}``.
* Ontology: JSON lines ``{"edge": [14, 6]}`` plus optional
  ``{"node": 14}`` for isolated nodes.

Parsing is total: every input yields either a fully validated object or a
CorpusError naming the offending line or element.
"""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Iterable
from xml.sax.saxutils import quoteattr

from .errors import CorpusError
from .model import (
    Concept,
    ConceptId,
    Context,
    ContextMember,
    CorpusIndex,
    Ontology,
    Shot,
    Video,
)


# -- contexts XML ---------------------------------------------------------


def parse_contexts_xml(text: str) -> list[Context]:
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        line, column = exc.position
        raise CorpusError(f"XML parse error at line {line}, column {column}: {exc}") from exc

    if root.tag != "contextes":
        raise CorpusError(f"expected root element 'contextes', got {root.tag!r}")

    contexts: list[Context] = []
    seen_nums: set[int] = set()
    for element in root:
        if element.tag != "Contexte":
            raise CorpusError(f"unexpected element {element.tag!r} under 'contextes'")
        num = _int_attr(element, "Num")
        name = _required_attr(element, "Name")
        declared = _int_attr(element, "Nbrconcept")
        if num in seen_nums:
            raise CorpusError(f"duplicate context Num={num}")
        seen_nums.add(num)

        members: list[ContextMember] = []
        for child in element:
            if child.tag != "concept":
                raise CorpusError(
                    f"unexpected element {child.tag!r} under context {name!r}"
                )
            members.append(
                ContextMember(
                    concept_id=_int_attr(child, "ConceptId"),
                    concept_name=_required_attr(child, "ConceptName"),
                    weight=_weight_attr(child),
                )
            )
        contexts.append(Context(num=num, name=name, declared_count=declared, members=tuple(members)))
    return contexts


def emit_contexts_xml(contexts: Iterable[Context]) -> str:
    """Inverse of parse_contexts_xml: parse(emit(x)) is structurally x."""
    lines = ['<?xml version="1.0" encoding="UTF-8"?>']
    contexts = list(contexts)
    if not contexts:
        lines.append("<contextes/>")
        return "\n".join(lines) + "\n"
    lines.append("<contextes>")
    for context in contexts:
        header = (
            f"  <Contexte Num={quoteattr(str(context.num))} "
            f"Name={quoteattr(context.name)} "
            f"Nbrconcept={quoteattr(str(context.declared_count))}"
        )
        if not context.members:
            lines.append(header + "/>")
            continue
        lines.append(header + ">")
        for member in context.members:
            lines.append(
                f"    <concept ConceptId={quoteattr(str(member.concept_id))} "
                f"ConceptName={quoteattr(member.concept_name)} "
                f"Weight={quoteattr(str(member.weight))}/>"
            )
        lines.append("  </Contexte>")
    lines.append("</contextes>")
    return "\n".join(lines) + "\n"


def _required_attr(element: ET.Element, name: str) -> str:
    value = element.get(name)
    if value is None or value == "":
        raise CorpusError(f"element {element.tag!r} missing attribute {name!r}")
    return value


def _int_attr(element: ET.Element, name: str) -> int:
    raw = _required_attr(element, name)
    try:
        return int(raw)
    except ValueError:
        raise CorpusError(f"attribute {name}={raw!r} is not an integer") from None


def _weight_attr(element: ET.Element) -> Fraction:
    raw = _required_attr(element, "Weight")
    try:
        weight = Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise CorpusError(f"attribute Weight={raw!r} is not a rational number") from None
    if weight < 0:
        raise CorpusError(f"attribute Weight={raw!r} is negative")
    return weight


# -- corpus index JSONL ---------------------------------------------------


def parse_corpus_index(text: str) -> CorpusIndex:
    concepts: list[Concept] = []
    videos: list[Video] = []
    for line_no, payload in _iter_jsonl(text):
        if set(payload) == {"concept"}:
            body = payload["concept"]
            _expect_keys(body, {"id", "name"}, line_no, optional=set())
            concepts.append(Concept(id=_as_int(body["id"], line_no), name=str(body["name"])))
        elif set(payload) == {"video"}:
            body = payload["video"]
            _expect_keys(body, {"id", "shots"}, line_no, optional={"title"})
            video_id = str(body["id"])
            shot_lists = body["shots"]
            if not isinstance(shot_lists, list):
                raise CorpusError(f"line {line_no}: 'shots' must be a list of lists")
            shots = []
            for index, concept_ids in enumerate(shot_lists):
                if not isinstance(concept_ids, list):
                    raise CorpusError(f"line {line_no}: shot {index} is not a list")
                shots.append(
                    Shot(
                        video_id=video_id,
                        shot_index=index,
                        concepts=frozenset(_as_int(c, line_no) for c in concept_ids),
                    )
                )
            videos.append(Video(id=video_id, title=str(body.get("title", "")), shots=tuple(shots)))
        else:
            raise CorpusError(
                f"line {line_no}: expected a single 'concept' or 'video' key, got {sorted(payload)}"
            )
    return CorpusIndex(concepts, videos)


# -- ontology JSONL -------------------------------------------------------


def parse_ontology(text: str, concepts: Iterable[ConceptId] | None = None) -> Ontology:
    """Parse the edge list; nodes are node lines plus edge endpoints.

    When ``concepts`` is given, every node and edge endpoint must be a
    declared concept id.
    """
    known = set(concepts) if concepts is not None else None
    nodes: set[ConceptId] = set()
    edges: list[tuple[ConceptId, ConceptId]] = []
    for line_no, payload in _iter_jsonl(text):
        if set(payload) == {"edge"}:
            pair = payload["edge"]
            if not isinstance(pair, list) or len(pair) != 2:
                raise CorpusError(f"line {line_no}: 'edge' must be a pair of concept ids")
            a, b = (_as_int(pair[0], line_no), _as_int(pair[1], line_no))
            if a == b:
                raise CorpusError(f"line {line_no}: self-loop on concept {a}")
            for endpoint in (a, b):
                if known is not None and endpoint not in known:
                    raise CorpusError(
                        f"line {line_no}: unknown concept {endpoint} in ontology edge"
                    )
            edges.append((a, b))
        elif set(payload) == {"node"}:
            node = _as_int(payload["node"], line_no)
            if known is not None and node not in known:
                raise CorpusError(f"line {line_no}: unknown concept {node} in ontology node")
            nodes.add(node)
        else:
            raise CorpusError(
                f"line {line_no}: expected a single 'edge' or 'node' key, got {sorted(payload)}"
            )
    return Ontology(nodes, edges)


# -- shared JSONL helpers -------------------------------------------------


def _iter_jsonl(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            payload = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"line {line_no}: invalid JSON: {exc.msg}") from exc
        if not isinstance(payload, dict):
            raise CorpusError(f"line {line_no}: expected a JSON object")
        yield line_no, payload


def _expect_keys(body: object, required: set[str], line_no: int, optional: set[str]) -> None:
    if not isinstance(body, dict):
        raise CorpusError(f"line {line_no}: expected a JSON object body")
    missing = required - set(body)
    extra = set(body) - required - optional
    if missing:
        raise CorpusError(f"line {line_no}: missing keys {sorted(missing)}")
    if extra:
        raise CorpusError(f"line {line_no}: unexpected keys {sorted(extra)}")


def _as_int(value: object, line_no: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise CorpusError(f"line {line_no}: expected an integer id, got {value!r}")
    return value
