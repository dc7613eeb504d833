"""Versioned JSON traces: exact recording and replay of games.

A trace lists the clique bound and every move with exact endpoint
strings (``"num/2^k"``), the assigned color, and an optional wall
update applied after the move.  Replay revalidates every move through
the core engine, so a trace doubles as a machine-checkable certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .coords import Coord
from .core import Color, GameError, GameState

__all__ = ["Trace", "TraceMove", "ReplayError", "replay"]

TRACE_VERSION = 1


class ReplayError(ValueError):
    """A trace move failed validation; carries the failing move index."""

    def __init__(self, move_index: int, message: str):
        super().__init__(f"move {move_index}: {message}")
        self.move_index = move_index


@dataclass(frozen=True)
class TraceMove:
    lo: Coord
    hi: Coord
    color: Color
    walls_after: Optional[tuple[Coord, Coord]] = None


@dataclass(frozen=True)
class Trace:
    omega: int = 4
    moves: tuple[TraceMove, ...] = ()

    def to_json(self) -> str:
        doc = {
            "version": TRACE_VERSION,
            "omega": self.omega,
            "moves": [
                {
                    "lo": str(m.lo),
                    "hi": str(m.hi),
                    "color": m.color.value,
                    **(
                        {"walls_after": [str(m.walls_after[0]), str(m.walls_after[1])]}
                        if m.walls_after is not None
                        else {}
                    ),
                }
                for m in self.moves
            ],
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Trace":
        doc = json.loads(text)
        if doc.get("version") != TRACE_VERSION:
            raise ValueError(f"unsupported trace version: {doc.get('version')!r}")
        moves = []
        for raw in doc["moves"]:
            walls = raw.get("walls_after")
            moves.append(
                TraceMove(
                    lo=Coord.parse(raw["lo"]),
                    hi=Coord.parse(raw["hi"]),
                    color=Color(raw["color"]),
                    walls_after=(
                        (Coord.parse(walls[0]), Coord.parse(walls[1]))
                        if walls is not None
                        else None
                    ),
                )
            )
        return cls(omega=int(doc["omega"]), moves=tuple(moves))


def replay(trace: Trace) -> GameState:
    """Re-run a trace through the engine, validating every move."""
    state = GameState(omega=trace.omega)
    for index, move in enumerate(trace.moves, start=1):
        try:
            pending = state.present(move.lo, move.hi)
            state = pending.assign(move.color)
            if move.walls_after is not None:
                state = state.set_walls(*move.walls_after)
        except (GameError, ValueError) as exc:
            raise ReplayError(index, str(exc)) from exc
    return state
