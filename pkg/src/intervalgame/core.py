"""Core mechanics of the online proper-interval coloring game.

Builder presents closed intervals with exact dyadic endpoints inside a
pair of nested walls; Algorithm immediately and irrevocably assigns each
interval one of seven colors.  The engine enforces the game's geometric
rules: no interval may contain another, all endpoints are distinct, no
point may be covered by more than ``omega`` intervals, and intersecting
intervals must receive distinct colors.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Optional, Sequence

from .coords import Coord, CoordOrderError, ONE, ZERO, midpoint

__all__ = [
    "Color",
    "COLORS",
    "PlacedInterval",
    "GameState",
    "PendingMove",
    "GameError",
    "ContainmentError",
    "CliqueError",
    "WallError",
    "WallOrderError",
    "DuplicateEndpointError",
    "ColorConflictError",
    "new_game",
]


class GameError(ValueError):
    """Base class for rule violations."""


class ContainmentError(GameError):
    """A candidate interval nests with an existing interval."""


class CliqueError(GameError):
    """A candidate would cover some point more than ``omega`` times."""


class WallError(GameError):
    """A candidate is not strictly inside the current walls."""


class WallOrderError(GameError):
    """A wall update does not nest inside the previous walls."""


class DuplicateEndpointError(GameError):
    """A candidate endpoint coincides with an existing endpoint."""


class ColorConflictError(GameError):
    """A color is already used by an intersecting interval."""


class Color(enum.Enum):
    """The seven abstract colors, totally ordered alphabetically."""

    a = "a"
    b = "b"
    c = "c"
    d = "d"
    e = "e"
    f = "f"
    g = "g"

    def __lt__(self, other: "Color") -> bool:
        return self.value < other.value

    def __str__(self) -> str:
        return self.value


COLORS: tuple[Color, ...] = tuple(Color)


@dataclass(frozen=True)
class PlacedInterval:
    """A presented interval ``[lo, hi]`` with its assigned color."""

    lo: Coord
    hi: Coord
    color: Color
    move_index: int

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise CoordOrderError(f"interval requires lo < hi: {self.lo}, {self.hi}")
        if self.move_index < 1:
            raise ValueError("move_index must be positive")

    def intersects(self, lo: Coord, hi: Coord) -> bool:
        """Closed-interval intersection with ``[lo, hi]``."""
        return not (self.hi < lo or hi < self.lo)

    def nests_with(self, lo: Coord, hi: Coord) -> bool:
        """True if ``[lo, hi]`` contains or is contained in this interval."""
        return (self.lo < lo and hi < self.hi) or (lo < self.lo and self.hi < hi)


def _max_coverage(
    intervals: Iterable[tuple[Coord, Coord]],
) -> int:
    """Maximum number of intervals covering any single point.

    Endpoints are pairwise distinct, so a sweep over sorted endpoints
    (+1 at a left endpoint, -1 at a right endpoint) is exact.
    """
    events = []
    for lo, hi in intervals:
        events.append((lo, 0))
        events.append((hi, 1))
    events.sort(key=lambda e: (e[0], e[1]))
    depth = best = 0
    for _, kind in events:
        if kind == 0:
            depth += 1
            best = max(best, depth)
        else:
            depth -= 1
    return best


@dataclass(frozen=True)
class GameState:
    """An immutable game position.

    ``intervals`` is the full move history in presentation order; the
    walls restrict only *future* placements — intervals outside the
    walls remain part of the position and still constrain coloring.
    """

    intervals: tuple[PlacedInterval, ...] = ()
    wall_left: Coord = ZERO
    wall_right: Coord = ONE
    omega: int = 4

    def __post_init__(self) -> None:
        if self.omega < 1:
            raise ValueError("omega must be positive")
        if not self.wall_left < self.wall_right:
            raise WallOrderError(
                f"walls must satisfy left < right: {self.wall_left}, {self.wall_right}"
            )

    # -- queries ----------------------------------------------------------
    def endpoints(self) -> Iterator[Coord]:
        for iv in self.intervals:
            yield iv.lo
            yield iv.hi

    def used_colors(self) -> frozenset[Color]:
        return frozenset(iv.color for iv in self.intervals)

    def clique_size(self) -> int:
        """Clique number of the interval graph = maximum point coverage."""
        return _max_coverage((iv.lo, iv.hi) for iv in self.intervals)

    def intersecting(self, lo: Coord, hi: Coord) -> list[PlacedInterval]:
        return [iv for iv in self.intervals if iv.intersects(lo, hi)]

    # -- moves, immutably -------------------------------------------------
    def present(self, lo: Coord, hi: Coord) -> "PendingMove":
        """Builder presents ``[lo, hi]``; validates every geometric rule."""
        if not lo < hi:
            raise CoordOrderError(f"present requires lo < hi: {lo}, {hi}")
        if not (self.wall_left < lo and hi < self.wall_right):
            raise WallError(
                f"[{lo}, {hi}] is not strictly inside walls "
                f"({self.wall_left}, {self.wall_right})"
            )
        taken = set(self.endpoints())
        if lo in taken or hi in taken:
            raise DuplicateEndpointError(f"endpoint reuse in [{lo}, {hi}]")
        for iv in self.intervals:
            if iv.nests_with(lo, hi):
                raise ContainmentError(
                    f"[{lo}, {hi}] nests with [{iv.lo}, {iv.hi}]"
                )
        spans = [(iv.lo, iv.hi) for iv in self.intervals]
        spans.append((lo, hi))
        if _max_coverage(spans) > self.omega:
            raise CliqueError(
                f"[{lo}, {hi}] would create a clique larger than {self.omega}"
            )
        return PendingMove(base=self, lo=lo, hi=hi)

    def set_walls(self, left: Coord, right: Coord) -> "GameState":
        """Shrink the walls; walls may only nest over the game."""
        if not (self.wall_left <= left and left < right and right <= self.wall_right):
            raise WallOrderError(
                f"walls ({left}, {right}) do not nest inside "
                f"({self.wall_left}, {self.wall_right})"
            )
        return replace(self, wall_left=left, wall_right=right)

    def check_invariants(self) -> None:
        """Assert every structural invariant; used by tests and replay."""
        seen: set[Coord] = set()
        for iv in self.intervals:
            for point in (iv.lo, iv.hi):
                if point in seen:
                    raise DuplicateEndpointError(f"duplicate endpoint {point}")
                seen.add(point)
        n = len(self.intervals)
        for i in range(n):
            a = self.intervals[i]
            for j in range(i + 1, n):
                b = self.intervals[j]
                if a.nests_with(b.lo, b.hi):
                    raise ContainmentError(
                        f"[{a.lo}, {a.hi}] nests with [{b.lo}, {b.hi}]"
                    )
                if a.color is b.color and a.intersects(b.lo, b.hi):
                    raise ColorConflictError(
                        f"intersecting intervals share color {a.color}"
                    )
        if self.clique_size() > self.omega:
            raise CliqueError("clique bound exceeded")


@dataclass(frozen=True)
class PendingMove:
    """A presented but not-yet-colored interval."""

    base: GameState
    lo: Coord
    hi: Coord

    def legal_colors(self) -> frozenset[Color]:
        """Colors not used by any interval intersecting the candidate."""
        blocked = {iv.color for iv in self.base.intersecting(self.lo, self.hi)}
        return frozenset(c for c in COLORS if c not in blocked)

    def assign(self, color: Color) -> GameState:
        """Algorithm's irrevocable reply; returns the extended state."""
        if color not in self.legal_colors():
            raise ColorConflictError(
                f"color {color} conflicts on [{self.lo}, {self.hi}]"
            )
        placed = PlacedInterval(
            lo=self.lo,
            hi=self.hi,
            color=color,
            move_index=len(self.base.intervals) + 1,
        )
        return replace(self.base, intervals=self.base.intervals + (placed,))


def new_game(omega: int = 4) -> GameState:
    """An empty position with walls at the ends of the unit segment."""
    return GameState(omega=omega)
