"""Accessibility command gateway.

Turns timestamped pointer/sensor traces into gesture tokens, maps gesture
and voice tokens onto navigation commands through a configurable binding
table, and dispatches commands to a session. Every navigation action is
reachable through the focus cursor (next/previous/select), so no pointing
precision is ever required.

Coordinates are normalized to [0, 1] with y growing downward (screen
convention): an upward swipe has a negative vertical displacement.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .errors import CorpusError, InvalidTransitionError, UnknownItemError
from .navigation import Level, Navigator, Session


class TracePoint(NamedTuple):
    t: float  # milliseconds
    x: float
    y: float


class GestureKind(Enum):
    SWIPE_LEFT = "SWIPE_LEFT"
    SWIPE_RIGHT = "SWIPE_RIGHT"
    SWIPE_UP = "SWIPE_UP"
    SWIPE_DOWN = "SWIPE_DOWN"
    PUSH_SELECT = "PUSH_SELECT"
    NONE = "NONE"


@dataclass(frozen=True)
class GestureParams:
    """Per-user recognition thresholds (motor-impairment tuning)."""

    min_displacement: float = 0.25
    max_duration_ms: float = 800.0
    axis_dominance: float = 2.0
    dwell_ms: float = 300.0


def recognize_gesture(
    trace: Sequence[TracePoint], params: GestureParams | None = None
) -> GestureKind:
    """Classify a trace as a swipe, a dwell select, or nothing.

    A swipe needs net displacement >= min_displacement on the dominant
    axis, duration <= max_duration_ms, and axis dominance >= the ratio.
    A dwell select needs total path length under a quarter of the swipe
    displacement and duration >= dwell_ms.
    """
    params = params or GestureParams()
    if not trace:
        raise ValueError("empty trace")
    for prev, cur in zip(trace, trace[1:]):
        if cur.t <= prev.t:
            raise ValueError(f"trace timestamps must strictly increase ({prev.t} -> {cur.t})")

    first, last = trace[0], trace[-1]
    dx = last.x - first.x
    dy = last.y - first.y
    duration = last.t - first.t
    path = sum(
        math.hypot(cur.x - prev.x, cur.y - prev.y) for prev, cur in zip(trace, trace[1:])
    )

    amplitude = max(abs(dx), abs(dy))
    if amplitude >= params.min_displacement and duration <= params.max_duration_ms:
        if abs(dx) >= abs(dy):
            dominance = abs(dx) / abs(dy) if dy != 0 else math.inf
            if dominance >= params.axis_dominance:
                return GestureKind.SWIPE_RIGHT if dx > 0 else GestureKind.SWIPE_LEFT
        else:
            dominance = abs(dy) / abs(dx) if dx != 0 else math.inf
            if dominance >= params.axis_dominance:
                return GestureKind.SWIPE_DOWN if dy > 0 else GestureKind.SWIPE_UP
    if path < params.min_displacement / 4.0 and duration >= params.dwell_ms:
        return GestureKind.PUSH_SELECT
    return GestureKind.NONE


class Action(Enum):
    NEXT_ITEM = "NEXT_ITEM"
    PREV_ITEM = "PREV_ITEM"
    SELECT = "SELECT"
    BACK = "BACK"
    MARK_RELEVANT = "MARK_RELEVANT"
    MARK_NONRELEVANT = "MARK_NONRELEVANT"
    GOTO_CONTEXTS = "GOTO_CONTEXTS"


@dataclass(frozen=True)
class NavigationCommand:
    action: Action
    argument: int | str | None = None


DEFAULT_BINDINGS: dict[str, Action] = {
    "SWIPE_RIGHT": Action.NEXT_ITEM,
    "SWIPE_LEFT": Action.PREV_ITEM,
    "SWIPE_UP": Action.BACK,
    "SWIPE_DOWN": Action.MARK_RELEVANT,
    "PUSH_SELECT": Action.SELECT,
    "suivant": Action.NEXT_ITEM,
    "précédent": Action.PREV_ITEM,
    "retour": Action.BACK,
    "choisir": Action.SELECT,
    "pertinent": Action.MARK_RELEVANT,
}

_GESTURE_KEYS = {kind.value for kind in GestureKind if kind is not GestureKind.NONE}


class CommandMap:
    """Bindings from gesture kinds and voice tokens to actions.

    Always total over gesture kinds (defaults fill any gap); voice tokens
    are matched case-insensitively and unbound ones yield no command.
    """

    def __init__(self, bindings: dict[str, Action] | None = None):
        merged = dict(DEFAULT_BINDINGS)
        if bindings:
            merged.update(bindings)
        self.bindings: dict[str, Action] = {}
        for token, action in merged.items():
            key = token if token in _GESTURE_KEYS else token.strip().casefold()
            self.bindings[key] = action
        missing = _GESTURE_KEYS - set(self.bindings)
        if missing:
            raise CorpusError(f"command map leaves gestures unbound: {sorted(missing)}")

    @classmethod
    def from_file(cls, path: str) -> "CommandMap":
        with open(path, encoding="utf-8") as handle:
            try:
                raw = json.load(handle)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"command map {path}: invalid JSON: {exc.msg}") from exc
        if not isinstance(raw, dict):
            raise CorpusError(f"command map {path}: expected a JSON object")
        bindings = {}
        for token, action_name in raw.items():
            try:
                bindings[token] = Action(action_name)
            except ValueError:
                raise CorpusError(
                    f"command map {path}: unknown action {action_name!r} for token {token!r}"
                ) from None
        return cls(bindings)

    def lookup_gesture(self, kind: GestureKind) -> Action | None:
        if kind is GestureKind.NONE:
            return None
        return self.bindings[kind.value]

    def lookup_voice(self, token: str) -> Action | None:
        return self.bindings.get(token.strip().casefold())


def map_command(
    token: GestureKind | str,
    command_map: CommandMap,
    session_level: Level,
    focused_item: int | str | None,
) -> NavigationCommand | None:
    """Resolve a token to a command; None when nothing is bound."""
    if isinstance(token, GestureKind):
        action = command_map.lookup_gesture(token)
    else:
        action = command_map.lookup_voice(token)
    if action is None:
        return None
    if action is Action.SELECT:
        if focused_item is None:
            raise InvalidTransitionError("nothing focused to select")
        return NavigationCommand(action, argument=focused_item)
    return NavigationCommand(action)


def dispatch(navigator: Navigator, session: Session, command: NavigationCommand) -> dict:
    """Execute one command against the session.

    Returns a JSON-safe outcome payload; errors from the navigation layer
    propagate unchanged so callers can surface them.
    """
    action = command.action
    if action in (Action.NEXT_ITEM, Action.PREV_ITEM):
        items = navigator.items(session)
        if items:
            step = 1 if action is Action.NEXT_ITEM else -1
            session.focus = min(max(session.focus + step, 0), len(items) - 1)
        focused = navigator.focused_item(session)
        return {"kind": "focus", "focus": session.focus, "item": focused}

    if action is Action.SELECT:
        argument = command.argument
        if argument is None:
            argument = navigator.focused_item(session)
            if argument is None:
                raise InvalidTransitionError("nothing focused to select")
        if session.level is Level.CONTEXTS:
            cloud = navigator.select_context(session, int(argument))
            return {
                "kind": "cloud",
                "context": session.selected_context,
                "concepts": [entry.concept_id for entry in cloud],
            }
        if session.level is Level.CONCEPTS:
            ranking, panel = navigator.select_concept(session, int(argument))
            return {
                "kind": "videos",
                "concept": session.selected_concept,
                "videos": [vid for vid, _ in ranking],
                "similar": [cid for cid, _ in panel.neighbors],
            }
        raise InvalidTransitionError("selecting a video is not a navigation step")

    if action is Action.BACK:
        navigator.back(session)
        return {"kind": "state", "level": session.level.value}

    if action is Action.GOTO_CONTEXTS:
        navigator.goto_contexts(session)
        return {"kind": "state", "level": session.level.value}

    if action in (Action.MARK_RELEVANT, Action.MARK_NONRELEVANT):
        if session.level is not Level.VIDEOS:
            raise InvalidTransitionError("feedback applies at level VIDEOS")
        video_id = command.argument if command.argument is not None else navigator.focused_item(session)
        if video_id is None:
            raise InvalidTransitionError("nothing focused to mark")
        if action is Action.MARK_RELEVANT:
            ranking = navigator.apply_feedback(session, {str(video_id)}, set())
        else:
            ranking = navigator.apply_feedback(session, set(), {str(video_id)})
        if ranking:
            session.focus = min(session.focus, len(ranking) - 1)
        return {
            "kind": "feedback",
            "marked": str(video_id),
            "videos": [vid for vid, _ in ranking],
        }

    raise InvalidTransitionError(f"unsupported action {action.value}")


@dataclass(frozen=True)
class TranscriptEntry:
    line: int
    event: str  # "gesture" | "voice"
    token: str
    action: str | None
    outcome: str

    def as_text(self) -> str:
        return json.dumps(
            {
                "line": self.line,
                "event": self.event,
                "token": self.token,
                "action": self.action,
                "outcome": self.outcome,
            },
            ensure_ascii=False,
            sort_keys=True,
        )


def _summarize(outcome: dict) -> str:
    kind = outcome["kind"]
    if kind == "focus":
        return f"focus={outcome['focus']} item={outcome['item']}"
    if kind == "cloud":
        return f"context={outcome['context']} concepts={len(outcome['concepts'])}"
    if kind == "videos":
        return f"concept={outcome['concept']} videos={len(outcome['videos'])}"
    if kind == "state":
        return f"level={outcome['level']}"
    if kind == "feedback":
        return f"marked={outcome['marked']} videos={len(outcome['videos'])}"
    return kind


def _parse_event_line(line_no: int, raw: str) -> tuple[str, object]:
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CorpusError(f"line {line_no}: invalid JSON: {exc.msg}") from exc
    if not isinstance(payload, dict) or len(payload) != 1:
        raise CorpusError(f"line {line_no}: expected a single 'gesture' or 'voice' key")
    if "gesture" in payload:
        points = payload["gesture"]
        if not isinstance(points, list) or not points:
            raise CorpusError(f"line {line_no}: 'gesture' must be a non-empty point list")
        trace = []
        for point in points:
            if not isinstance(point, dict) or not {"t", "x", "y"} <= set(point):
                raise CorpusError(f"line {line_no}: gesture points need t, x and y")
            trace.append(TracePoint(float(point["t"]), float(point["x"]), float(point["y"])))
        return "gesture", trace
    if "voice" in payload:
        token = payload["voice"]
        if not isinstance(token, str) or not token:
            raise CorpusError(f"line {line_no}: 'voice' must be a non-empty string")
        return "voice", token
    raise CorpusError(f"line {line_no}: expected a single 'gesture' or 'voice' key")


def process_event(
    navigator: Navigator,
    session: Session,
    event: str,
    payload: object,
    command_map: CommandMap,
    params: GestureParams | None = None,
) -> dict:
    """Recognize -> map -> dispatch one event; errors become outcomes."""
    if event == "gesture":
        kind = recognize_gesture(payload, params)  # type: ignore[arg-type]
        token = kind.value
        source: GestureKind | str = kind
    else:
        token = str(payload)
        source = token
    try:
        command = map_command(token=source, command_map=command_map,
                              session_level=session.level,
                              focused_item=navigator.focused_item(session))
    except (InvalidTransitionError, UnknownItemError) as exc:
        return {"event": event, "token": token, "action": None, "outcome": f"error: {exc}"}
    if command is None:
        return {"event": event, "token": token, "action": None, "outcome": "no command"}
    try:
        result = dispatch(navigator, session, command)
        outcome = _summarize(result)
    except (InvalidTransitionError, UnknownItemError, ValueError) as exc:
        outcome = f"error: {exc}"
    return {"event": event, "token": token, "action": command.action.value, "outcome": outcome}


def replay_trace_file(
    path: str,
    command_map: CommandMap,
    navigator: Navigator,
    session: Session,
    params: GestureParams | None = None,
) -> list[TranscriptEntry]:
    """Replay a JSONL event file against the session, one entry per event."""
    with open(path, encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    transcript: list[TranscriptEntry] = []
    for line_no, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        event, payload = _parse_event_line(line_no, raw)
        try:
            result = process_event(navigator, session, event, payload, command_map, params)
        except ValueError as exc:
            raise CorpusError(f"line {line_no}: {exc}") from exc
        transcript.append(
            TranscriptEntry(
                line=line_no,
                event=result["event"],
                token=result["token"],
                action=result["action"],
                outcome=result["outcome"],
            )
        )
    return transcript
