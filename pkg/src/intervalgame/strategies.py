"""Builder's side of the game: the forcing policy and separation engine.

The master strategy is a table mapping canonical window signatures to
moves (see :mod:`intervalgame.solver` for how it is derived and why a
signature captures everything that matters).  A :class:`Session` walks
the table: it computes the signature of the live position, translates
the stored move out of canonical orientation (mirroring placements when
the canonical form is the dual of the actual window), presents the
interval, and hands the color choice to the adversary.

``separate`` implements the inductive separation construction used by
interval-combinatorics lower bounds: it presents ``k`` intervals whose
left ends interleave inside one gap and right ends inside another, such
that the colors landing in a chosen set ``Y`` occupy exactly a prefix
of the group.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Optional

from .adversaries import Adversary
from .coords import Coord, midpoint
from .core import COLORS, Color, GameError, GameState, PendingMove, new_game
from .solver import Move, apply_move, mirror_move, signature_of
from .traces import Trace, TraceMove

__all__ = [
    "StrategyInconsistencyError",
    "Session",
    "SeparationResult",
    "separate",
    "load_policy",
    "run_master",
]


class StrategyInconsistencyError(RuntimeError):
    """The strategy tables and the live position disagree.

    This is always a bug (mistranscribed data or a broken invariant),
    never a recoverable game situation.
    """


_POLICY_CACHE: Optional[dict] = None


def load_policy() -> dict:
    """The winning policy shipped in ``data/strategy.json``."""
    global _POLICY_CACHE
    if _POLICY_CACHE is None:
        doc = json.loads(
            resources.files("intervalgame.data")
            .joinpath("strategy.json")
            .read_text()
        )
        _POLICY_CACHE = {
            key: tuple(entry["move"]) for key, entry in doc["policy"].items()
        }
    return _POLICY_CACHE


@dataclass
class Session:
    """A single live game: position, move log, and orientation."""

    state: GameState
    adversary: Optional[Adversary] = None
    moves: list[TraceMove] = field(default_factory=list)
    orientation: str = "normal"  # "mirrored" when the canonical window is the dual

    @classmethod
    def new(cls, adversary: Optional[Adversary] = None, omega: int = 4) -> "Session":
        return cls(state=new_game(omega=omega), adversary=adversary)

    def trace(self) -> Trace:
        return Trace(omega=self.state.omega, moves=tuple(self.moves))

    # -- raw moves ----------------------------------------------------------
    def present(self, lo: Coord, hi: Coord) -> PendingMove:
        try:
            return self.state.present(lo, hi)
        except GameError as exc:
            raise StrategyInconsistencyError(
                f"strategy placed an illegal interval [{lo}, {hi}]: {exc}"
            ) from exc

    def commit(self, pending: PendingMove, color: Color) -> GameState:
        self.state = pending.assign(color)
        self.moves.append(TraceMove(lo=pending.lo, hi=pending.hi, color=color))
        return self.state

    def present_and_color(self, lo: Coord, hi: Coord) -> Color:
        if self.adversary is None:
            raise ValueError("session has no adversary to choose colors")
        pending = self.present(lo, hi)
        color = self.adversary.choose(pending)
        self.commit(pending, color)
        return color

    def set_walls(self, left: Coord, right: Coord) -> None:
        self.state = self.state.set_walls(left, right)
        if self.moves:
            last = self.moves[-1]
            self.moves[-1] = TraceMove(
                lo=last.lo, hi=last.hi, color=last.color, walls_after=(left, right)
            )

    # -- policy-driven stepping ----------------------------------------------
    def finished(self, target_colors: int = len(COLORS)) -> bool:
        return len(self.state.used_colors()) >= target_colors

    def next_pending(self, policy: Optional[dict] = None) -> PendingMove:
        """Advance wall moves until the policy presents an interval."""
        policy = policy if policy is not None else load_policy()
        for _ in range(64):  # wall chains strictly shrink; 64 is a safe bound
            sig = signature_of(self.state)
            move = policy.get(sig.key)
            if move is None:
                raise StrategyInconsistencyError(
                    f"no policy entry for signature {sig.key!r}"
                )
            self.orientation = "mirrored" if sig.mirrored else "normal"
            if sig.mirrored:
                move = mirror_move(move, sig.width)
            result = apply_move(self.state, move)
            if result is None:
                raise StrategyInconsistencyError(
                    f"policy move {move} is illegal at signature {sig.key!r}"
                )
            if isinstance(result, GameState):
                self.state = result
                if self.moves:
                    last = self.moves[-1]
                    self.moves[-1] = TraceMove(
                        lo=last.lo,
                        hi=last.hi,
                        color=last.color,
                        walls_after=(result.wall_left, result.wall_right),
                    )
                continue
            return result
        raise StrategyInconsistencyError("wall-move chain did not terminate")


def run_master(
    session: Session,
    policy: Optional[dict] = None,
    target_colors: int = len(COLORS),
) -> GameState:
    """Drive the adversary from the session's position to seven colors."""
    policy = policy if policy is not None else load_policy()
    if session.adversary is None:
        raise ValueError("run_master requires a session with an adversary")
    while not session.finished(target_colors):
        pending = session.next_pending(policy)
        color = session.adversary.choose(pending)
        session.commit(pending, color)
    return session.state


@dataclass(frozen=True)
class SeparationResult:
    """Output of the separation construction.

    ``placed`` is sorted so that left endpoints ascend inside the left
    gap and right endpoints ascend, in the same order, inside the right
    gap; colors in ``Y`` occupy positions ``1..threshold_j`` exactly.
    """

    placed: tuple[tuple[Coord, Coord, Color], ...]
    threshold_j: int


def separate(
    session: Session,
    k: int,
    Y: frozenset[Color] | set[Color],
    left_gap: tuple[Coord, Coord],
    right_gap: tuple[Coord, Coord],
) -> SeparationResult:
    """Present ``k`` interleaved intervals splitting colors in ``Y`` left.

    ``left_gap = (alpha1, beta1)`` and ``right_gap = (alpha2, beta2)``
    with ``beta1 < alpha2`` bound where the new left and right endpoints
    go.  Works by induction on ``k``: the first interval takes both gap
    midpoints; each later interval is inserted at the current threshold
    — in front of the group, after it, or between two neighbors — so
    that ``Y``-colored intervals always form a prefix.
    """
    alpha1, beta1 = left_gap
    alpha2, beta2 = right_gap
    if not (alpha1 < beta1 < alpha2 < beta2):
        raise ValueError("separation gaps must be ordered and disjoint")
    if k < 1:
        raise ValueError("k must be positive")

    placed: list[tuple[Coord, Coord, Color]] = []
    j = 0
    for n in range(1, k + 1):
        if n == 1:
            lo, hi = midpoint(alpha1, beta1), midpoint(alpha2, beta2)
        elif j == 0:
            lo = midpoint(alpha1, placed[0][0])
            hi = midpoint(alpha2, placed[0][1])
        elif j == n - 1:
            lo = midpoint(placed[-1][0], beta1)
            hi = midpoint(placed[-1][1], beta2)
        else:
            lo = midpoint(placed[j - 1][0], placed[j][0])
            hi = midpoint(placed[j - 1][1], placed[j][1])
        color = session.present_and_color(lo, hi)
        placed.insert(j, (lo, hi, color))
        if color in Y:
            j += 1
    return SeparationResult(placed=tuple(placed), threshold_j=j)
