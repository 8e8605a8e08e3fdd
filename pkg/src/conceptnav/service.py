"""HTTP/JSON session service over one loaded engine.

Sessions live in memory and expire after an idle period. All derived
tables are built once at startup; request handlers only read them, so any
number of clients can navigate concurrently. Commands against one session
are serialized by a per-session lock.

Error mapping: unknown ids -> 404, commands illegal in the current
session state -> 409, malformed bodies or values -> 400.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict, Field

from .engine import Engine
from .errors import CorpusError, InvalidTransitionError, UnknownItemError
from .gateway import CommandMap, GestureParams, process_event, TracePoint
from .navigation import Level, Navigator, Session
from .weighting import concept_pertinence

DEFAULT_SESSION_TTL = 30 * 60.0  # seconds


@dataclass
class _Slot:
    session: Session
    last_access: float
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    """In-memory session registry with idle expiry."""

    def __init__(self, navigator: Navigator, ttl: float = DEFAULT_SESSION_TTL, clock=time.monotonic):
        self._navigator = navigator
        self._ttl = ttl
        self._clock = clock
        self._slots: dict[str, _Slot] = {}
        self._guard = threading.Lock()

    def create(self) -> Session:
        session = self._navigator.start_session()
        with self._guard:
            self._slots[session.id] = _Slot(session=session, last_access=self._clock())
        return session

    def get(self, session_id: str) -> _Slot:
        now = self._clock()
        with self._guard:
            slot = self._slots.get(session_id)
            if slot is not None and now - slot.last_access > self._ttl:
                del self._slots[session_id]
                slot = None
            if slot is None:
                raise UnknownItemError(f"unknown session {session_id!r}")
            slot.last_access = now
            return slot


class SelectContextBody(BaseModel):
    num: int


class SelectConceptBody(BaseModel):
    id: int


class FeedbackBody(BaseModel):
    model_config = ConfigDict(populate_by_name=True)
    relevant: list[str] = Field(default_factory=list)
    non_relevant: list[str] = Field(default_factory=list, alias="nonRelevant")


class EventBody(BaseModel):
    gesture: list[dict] | None = None
    voice: str | None = None


def _session_state(navigator: Navigator, session: Session) -> dict:
    focused = navigator.focused_item(session)
    return {
        "id": session.id,
        "level": session.level.value,
        "selectedContext": session.selected_context,
        "selectedConcept": session.selected_concept,
        "focus": session.focus,
        "focusedItem": focused,
        "historyDepth": len(session.history),
        "feedbackFactors": dict(sorted(session.feedback_factors.items())),
    }


def create_app(
    engine: Engine,
    command_map: CommandMap | None = None,
    gesture_params: GestureParams | None = None,
    session_ttl: float = DEFAULT_SESSION_TTL,
    clock=time.monotonic,
) -> FastAPI:
    navigator = engine.navigator()
    store = SessionStore(navigator, ttl=session_ttl, clock=clock)
    command_map = command_map or CommandMap()

    app = FastAPI(title="conceptnav", version="0.1.0")

    @app.exception_handler(UnknownItemError)
    async def _unknown(request: Request, exc: UnknownItemError):
        return JSONResponse(status_code=404, content={"error": str(exc)})

    @app.exception_handler(InvalidTransitionError)
    async def _conflict(request: Request, exc: InvalidTransitionError):
        return JSONResponse(status_code=409, content={"error": str(exc)})

    @app.exception_handler(CorpusError)
    async def _corpus(request: Request, exc: CorpusError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(ValueError)
    async def _bad_value(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def _bad_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": "malformed body"})

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/contexts")
    def contexts():
        return {
            "contexts": [
                {
                    "num": ctx.num,
                    "name": ctx.name,
                    "declaredCount": ctx.declared_count,
                    "members": [
                        {
                            "conceptId": m.concept_id,
                            "conceptName": m.concept_name,
                            "weight": float(m.weight),
                        }
                        for m in ctx.members
                    ],
                }
                for ctx in engine.corpus.contexts
            ]
        }

    @app.post("/sessions", status_code=201)
    def create_session():
        session = store.create()
        return _session_state(navigator, session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        slot = store.get(session_id)
        with slot.lock:
            return _session_state(navigator, slot.session)

    @app.post("/sessions/{session_id}/select-context")
    def select_context(session_id: str, body: SelectContextBody):
        slot = store.get(session_id)
        with slot.lock:
            cloud = navigator.select_context(slot.session, body.num)
            return {
                "session": _session_state(navigator, slot.session),
                "cloud": _cloud_payload(cloud),
            }

    @app.post("/sessions/{session_id}/select-concept")
    def select_concept(session_id: str, body: SelectConceptBody):
        slot = store.get(session_id)
        with slot.lock:
            ranking, panel = navigator.select_concept(slot.session, body.id)
            return {
                "session": _session_state(navigator, slot.session),
                "videos": _ranking_payload(ranking),
                "similar": [
                    {
                        "conceptId": cid,
                        "name": engine.corpus.concept(cid).name,
                        "similarity": sim,
                    }
                    for cid, sim in panel.neighbors
                ],
            }

    @app.get("/sessions/{session_id}/cloud")
    def get_cloud(session_id: str):
        slot = store.get(session_id)
        with slot.lock:
            if slot.session.level is Level.CONTEXTS:
                raise InvalidTransitionError("no cloud at level CONTEXTS")
            return {"cloud": _cloud_payload(navigator.cloud(slot.session))}

    @app.get("/sessions/{session_id}/videos")
    def get_videos(session_id: str):
        slot = store.get(session_id)
        with slot.lock:
            if slot.session.level is not Level.VIDEOS:
                raise InvalidTransitionError(
                    f"no ranking at level {slot.session.level.value}"
                )
            return {"videos": _ranking_payload(navigator.ranking(slot.session))}

    @app.get("/sessions/{session_id}/map")
    def get_map(session_id: str):
        slot = store.get(session_id)
        with slot.lock:
            layout = navigator.video_map(slot.session)
            return {
                "points": [
                    {"videoId": vid, "x": x, "y": y}
                    for vid, (x, y) in layout.points.items()
                ],
                "stress": layout.stress,
            }

    @app.post("/sessions/{session_id}/feedback")
    def feedback(session_id: str, body: FeedbackBody):
        slot = store.get(session_id)
        with slot.lock:
            ranking = navigator.apply_feedback(
                slot.session, set(body.relevant), set(body.non_relevant)
            )
            return {
                "session": _session_state(navigator, slot.session),
                "videos": _ranking_payload(ranking),
            }

    @app.post("/sessions/{session_id}/back")
    def back(session_id: str):
        slot = store.get(session_id)
        with slot.lock:
            navigator.back(slot.session)
            return {"session": _session_state(navigator, slot.session)}

    @app.post("/sessions/{session_id}/events")
    def events(session_id: str, body: EventBody):
        slot = store.get(session_id)
        if (body.gesture is None) == (body.voice is None):
            raise ValueError("event body needs exactly one of 'gesture' or 'voice'")
        with slot.lock:
            if body.gesture is not None:
                try:
                    trace = [
                        TracePoint(float(p["t"]), float(p["x"]), float(p["y"]))
                        for p in body.gesture
                    ]
                except (KeyError, TypeError):
                    raise ValueError("gesture points need numeric t, x and y") from None
                result = process_event(
                    navigator, slot.session, "gesture", trace, command_map, gesture_params
                )
            else:
                result = process_event(
                    navigator, slot.session, "voice", body.voice, command_map, gesture_params
                )
            result["session"] = _session_state(navigator, slot.session)
            return result

    @app.get("/sessions/{session_id}/query")
    def query(session_id: str, text: str = ""):
        slot = store.get(session_id)
        with slot.lock:
            hits = navigator.text_query(slot.session, text)
            return {
                "concepts": [
                    {
                        "conceptId": cid,
                        "name": engine.corpus.concept(cid).name,
                        "pertinence": _pertinence(cid),
                    }
                    for cid in hits
                ]
            }

    def _pertinence(cid: int) -> float:
        return concept_pertinence(engine.table, cid)

    def _cloud_payload(cloud) -> list[dict]:
        return [
            {
                "conceptId": entry.concept_id,
                "name": engine.corpus.concept(entry.concept_id).name,
                "pertinence": entry.pertinence,
                "fontSize": entry.font_size,
            }
            for entry in cloud
        ]

    def _ranking_payload(ranking) -> list[dict]:
        return [
            {
                "rank": position,
                "videoId": vid,
                "title": engine.corpus.video(vid).title,
                "weight": weight,
            }
            for position, (vid, weight) in enumerate(ranking, start=1)
        ]

    return app
