"""Session service exposing puzzle state over HTTP.

Endpoint paths, field names and error codes are frozen in docs/api.md.
Sessions live in process memory; each session's transitions are serialized
by its own lock while presentations are shared read-only across sessions.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .errors import ParameterOutOfRange, RubikMapError, UnknownFace, UnknownSession
from .maps import MapM, catalog_map, catalog_names
from .presentation import RubikPresentation, rubik_generators
from .puzzle import PuzzleState, word_to_json


class CreateSessionRequest(BaseModel):
    map: str


class MoveRequest(BaseModel):
    face: str
    exponent: int = 1


class ScrambleRequest(BaseModel):
    seed: int | None = None
    moves: int = 30


@dataclass
class Session:
    id: str
    state: PuzzleState
    created: float
    lock: threading.Lock = field(default_factory=threading.Lock)


def map_summary(m: MapM) -> dict:
    return {
        "name": m.name,
        "vertices": m.n_vertices,
        "edges": m.n_edges,
        "faces": m.n_faces,
        "genus": m.genus(),
        "planar": m.genus() == 0,
        "face_sizes": list(m.face_sizes()),
    }


def map_descriptor(p: RubikPresentation) -> dict:
    """Everything a client needs to draw the puzzle and hit-test faces."""
    m = p.map
    return {
        **map_summary(m),
        "edge_list": [[m.vertex_of[e.darts[0]], m.vertex_of[e.darts[1]]]
                      for e in m.edges],
        "face_list": [{
            "label": p.face_labels[f.index],
            "size": f.size,
            "vertices": [m.vertex_of[d] for d in f.darts],
            "edges": [m.edge_of[d] for d in f.darts],
        } for f in m.faces],
        "corners": [{"point": c.point, "face": p.face_labels[c.face],
                     "vertex": c.vertex} for c in p.corners],
        "side_edges": [{"point": s.point, "face": p.face_labels[s.face],
                        "edge": s.edge} for s in p.side_edges],
    }


def state_payload(state: PuzzleState) -> dict:
    doc = state.to_doc()
    return {
        "map": state.presentation.map.name,
        "face_labels": list(state.presentation.face_labels),
        "solved": state.is_solved(),
        "stickers": doc["stickers"],
        "history": doc["history"],
    }


def create_app(map_names: list[str] | None = None) -> FastAPI:
    app = FastAPI(title="rubikmap play service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
        allow_headers=["*"])
    names = map_names or catalog_names()
    presentations: dict[str, RubikPresentation] = {}
    presentations_lock = threading.Lock()
    sessions: dict[str, Session] = {}
    sessions_lock = threading.Lock()

    def get_presentation(name: str) -> RubikPresentation:
        if name not in names:
            raise ParameterOutOfRange(f"unknown catalog map {name!r}")
        with presentations_lock:
            if name not in presentations:
                presentations[name] = rubik_generators(catalog_map(name))
            return presentations[name]

    def get_session(session_id: str) -> Session:
        with sessions_lock:
            session = sessions.get(session_id)
        if session is None:
            raise UnknownSession(f"no session {session_id!r}")
        return session

    @app.exception_handler(RubikMapError)
    async def domain_error(_: Request, exc: RubikMapError):
        code, status = "malformed_request", 400
        if isinstance(exc, UnknownSession):
            code, status = "unknown_session", 404
        elif isinstance(exc, UnknownFace):
            code, status = "unknown_face", 400
        elif isinstance(exc, ParameterOutOfRange):
            code, status = "unknown_map", 404
        return JSONResponse(status_code=status,
                            content={"error": code, "detail": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def validation_error(_: Request, exc: RequestValidationError):
        return JSONResponse(status_code=422,
                            content={"error": "malformed_request",
                                     "detail": str(exc.errors())})

    @app.get("/maps")
    def list_maps():
        return {"maps": [map_summary(catalog_map(n)) for n in names]}

    @app.get("/maps/{name}")
    def describe_map(name: str):
        return map_descriptor(get_presentation(name))

    @app.post("/sessions")
    def create_session(req: CreateSessionRequest):
        state = PuzzleState(get_presentation(req.map))
        session = Session(id=uuid.uuid4().hex[:12], state=state, created=time.time())
        with sessions_lock:
            sessions[session.id] = session
        return {"session": session.id, "state": state_payload(state)}

    @app.get("/sessions/{session_id}")
    def get_state(session_id: str):
        session = get_session(session_id)
        with session.lock:
            return {"session": session.id, "state": state_payload(session.state)}

    @app.post("/sessions/{session_id}/move")
    def apply_move(session_id: str, req: MoveRequest):
        session = get_session(session_id)
        with session.lock:
            p = session.state.presentation
            if req.face not in p.face_labels:
                raise UnknownFace(f"no face labeled {req.face!r} on {p.map.name}")
            session.state.apply_move(p.face_labels.index(req.face), req.exponent)
            return {"session": session.id, "state": state_payload(session.state)}

    @app.post("/sessions/{session_id}/scramble")
    def scramble(session_id: str, req: ScrambleRequest | None = None):
        req = req or ScrambleRequest()
        session = get_session(session_id)
        with session.lock:
            word = session.state.scramble(seed=req.seed, moves=req.moves)
            return {"session": session.id,
                    "word": word_to_json(session.state.presentation, word),
                    "state": state_payload(session.state)}

    @app.post("/sessions/{session_id}/reset")
    def reset(session_id: str):
        session = get_session(session_id)
        with session.lock:
            session.state.reset()
            return {"session": session.id, "state": state_payload(session.state)}

    @app.post("/sessions/{session_id}/solve")
    def solve(session_id: str):
        session = get_session(session_id)
        with session.lock:
            word = session.state.solve()
            return {"session": session.id,
                    "word": word_to_json(session.state.presentation, word),
                    "state": state_payload(session.state)}

    return app


app = create_app()
