"""HTTP JSON API (/v1): interactive sessions where a human colors.

The server is authoritative: it runs the Builder policy, validates
every color against the engine, and sends exact coordinate strings
("num/2^k") so clients can render proportionally without ever doing
game logic themselves.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .algebra import load_patterns, match_pattern, state_matrix
from .core import Color, GameError, PendingMove
from .strategies import Session, StrategyInconsistencyError

__all__ = ["app"]

app = FastAPI(title="interval coloring game", version="1.0")


@dataclass
class SessionRecord:
    session_id: str
    game: Session
    pending: Optional[PendingMove]
    status: str = "awaiting-color"  # or "finished"
    target_colors: int = 7
    lock: threading.Lock = field(default_factory=threading.Lock)
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)


_SESSIONS: dict[str, SessionRecord] = {}
_PATTERNS = None


def _patterns():
    global _PATTERNS
    if _PATTERNS is None:
        _PATTERNS = load_patterns()
    return _PATTERNS


def _view(record: SessionRecord) -> dict:
    state = record.game.state
    m = state_matrix(state)
    pending = record.pending
    matched = [
        name
        for name, pattern in _patterns().items()
        if match_pattern(state, pattern) is not None
    ]
    return {
        "session_id": record.session_id,
        "status": record.status,
        "omega": state.omega,
        "target_colors": record.target_colors,
        "walls": [str(state.wall_left), str(state.wall_right)],
        "used_colors": sorted(c.value for c in state.used_colors()),
        "intervals": [
            {
                "lo": str(iv.lo),
                "hi": str(iv.hi),
                "color": iv.color.value,
                "move_index": iv.move_index,
            }
            for iv in state.intervals
        ],
        "pending": (
            {"lo": str(pending.lo), "hi": str(pending.hi)}
            if pending is not None
            else None
        ),
        "legal_colors": (
            sorted(c.value for c in pending.legal_colors())
            if pending is not None
            else []
        ),
        "matrix": {
            "sides": list(m.sides),
            "colors": [c.value for c in m.colors],
        },
        "matched_patterns": matched,
    }


def _get(session_id: str) -> SessionRecord:
    record = _SESSIONS.get(session_id)
    if record is None:
        raise HTTPException(status_code=404, detail="unknown session")
    return record


class ColorBody(BaseModel):
    color: str


class NewSessionBody(BaseModel):
    omega: int = 4
    target_colors: int = 7


@app.post("/v1/sessions")
def create_session(body: Optional[NewSessionBody] = None) -> dict:
    body = body or NewSessionBody()
    session = Session.new(omega=body.omega)
    record = SessionRecord(
        session_id=uuid.uuid4().hex,
        game=session,
        pending=session.next_pending(),
        target_colors=body.target_colors,
    )
    _SESSIONS[record.session_id] = record
    return _view(record)


@app.get("/v1/sessions/{session_id}")
def get_state(session_id: str) -> dict:
    return _view(_get(session_id))


@app.get("/v1/sessions/{session_id}/legal")
def get_legal(session_id: str) -> dict:
    record = _get(session_id)
    return {
        "legal_colors": (
            sorted(c.value for c in record.pending.legal_colors())
            if record.pending is not None
            else []
        )
    }


@app.get("/v1/sessions/{session_id}/trace")
def get_trace(session_id: str) -> JSONResponse:
    record = _get(session_id)
    return JSONResponse(content=json.loads(record.game.trace().to_json()))


@app.post("/v1/sessions/{session_id}/color")
def post_color(session_id: str, body: ColorBody) -> dict:
    record = _get(session_id)
    if not record.lock.acquire(blocking=False):
        raise HTTPException(status_code=409, detail="move already in progress")
    try:
        if record.status == "finished" or record.pending is None:
            raise HTTPException(status_code=409, detail="session is finished")
        try:
            color = Color(body.color)
        except ValueError:
            raise HTTPException(status_code=422, detail=f"no such color {body.color!r}")
        legal = record.pending.legal_colors()
        if color not in legal:
            raise HTTPException(
                status_code=409,
                detail={
                    "error": "illegal color",
                    "legal_colors": sorted(c.value for c in legal),
                },
            )
        record.game.commit(record.pending, color)
        if record.game.finished(record.target_colors):
            record.status = "finished"
            record.pending = None
        else:
            try:
                record.pending = record.game.next_pending()
            except StrategyInconsistencyError as exc:
                raise HTTPException(status_code=500, detail=str(exc))
        record.updated = time.time()
        return _view(record)
    finally:
        record.lock.release()


# Optionally serve a built web client from frontend/dist if present.
_FRONTEND = Path(__file__).resolve().parents[3] / "frontend" / "dist"
if _FRONTEND.is_dir():  # pragma: no cover - depends on repo layout
    from fastapi.staticfiles import StaticFiles

    app.mount("/", StaticFiles(directory=str(_FRONTEND), html=True), name="ui")
