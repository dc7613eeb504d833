"""State-representation matrices and pattern matching.

A position is summarized by a 2-row matrix over the endpoints that lie
strictly between the walls, sorted in ascending order: the first row
records whether each endpoint opens (0) or closes (1) an interval and
the second row records its color.  Named milestone states are matched
as contiguous-column submatrices up to an injective recoloring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional, Sequence

from .coords import Coord
from .core import COLORS, Color, GameState

__all__ = [
    "StateMatrix",
    "Pattern",
    "MatchBinding",
    "state_matrix",
    "dual",
    "equivalent",
    "canonical_form",
    "match_pattern",
    "load_patterns",
    "GAME_PATTERN_NAME",
]

GAME_PATTERN_NAME = "game"


@dataclass(frozen=True)
class StateMatrix:
    """Ordered columns of ``(side, color)``; side 0 opens, 1 closes."""

    columns: tuple[tuple[int, Color], ...]

    def __len__(self) -> int:
        return len(self.columns)

    @property
    def sides(self) -> tuple[int, ...]:
        return tuple(side for side, _ in self.columns)

    @property
    def colors(self) -> tuple[Color, ...]:
        return tuple(color for _, color in self.columns)

    def encode(self) -> str:
        """Compact text form, e.g. ``"1a 0c 1b"``."""
        return " ".join(f"{side}{color}" for side, color in self.columns)

    @classmethod
    def decode(cls, text: str) -> "StateMatrix":
        cols = []
        for token in text.split():
            if len(token) != 2 or token[0] not in "01":
                raise ValueError(f"bad matrix column token {token!r}")
            cols.append((int(token[0]), Color(token[1])))
        return cls(tuple(cols))


def state_matrix(state: GameState) -> StateMatrix:
    """Matrix of the endpoints strictly inside the open wall interval."""
    columns: list[tuple[Coord, int, Color]] = []
    for iv in state.intervals:
        if state.wall_left < iv.lo < state.wall_right:
            columns.append((iv.lo, 0, iv.color))
        if state.wall_left < iv.hi < state.wall_right:
            columns.append((iv.hi, 1, iv.color))
    columns.sort(key=lambda c: c[0])
    return StateMatrix(tuple((side, color) for _, side, color in columns))


def visible_coords(state: GameState) -> tuple[Coord, ...]:
    """The sorted endpoint coordinates behind ``state_matrix(state)``."""
    points = [
        p
        for iv in state.intervals
        for p in (iv.lo, iv.hi)
        if state.wall_left < p < state.wall_right
    ]
    points.sort()
    return tuple(points)


def dual(m: StateMatrix) -> StateMatrix:
    """Mirror image of a matrix: reverse the columns and flip each side.

    Reading a representation right-to-left turns every opening endpoint
    into a closing one, so the side bits flip along with the reversal;
    this makes ``dual`` the matrix of the geometrically mirrored state
    and an involution.
    """
    return StateMatrix(
        tuple((1 - side, color) for side, color in reversed(m.columns))
    )


def equivalent(m1: StateMatrix, m2: StateMatrix) -> bool:
    """True if the side rows agree and a recoloring maps m1 onto m2."""
    if m1.sides != m2.sides:
        return False
    forward: dict[Color, Color] = {}
    backward: dict[Color, Color] = {}
    for (_, c1), (_, c2) in zip(m1.columns, m2.columns):
        if forward.setdefault(c1, c2) is not c2:
            return False
        if backward.setdefault(c2, c1) is not c1:
            return False
    return True


def canonical_form(m: StateMatrix) -> StateMatrix:
    """Relabel colors in order of first appearance (first seen -> a)."""
    relabel: dict[Color, Color] = {}
    cols = []
    for side, color in m.columns:
        if color not in relabel:
            relabel[color] = COLORS[len(relabel)]
        cols.append((side, relabel[color]))
    return StateMatrix(tuple(cols))


@dataclass(frozen=True)
class Pattern:
    """A named state template with abstract color variables.

    Distinct variables must bind to distinct colors.  The ``game``
    pattern is special: it matches any position using all seven colors.
    """

    name: str
    columns: tuple[tuple[int, str], ...]

    def __len__(self) -> int:
        return len(self.columns)


@dataclass(frozen=True)
class MatchBinding:
    """A concrete occurrence of a pattern in a position's matrix."""

    pattern: str
    column_range: tuple[int, int]
    sigma: tuple[tuple[str, Color], ...]
    anchor_coords: tuple[Coord, ...]
    is_dual: bool = False

    def sigma_map(self) -> dict[str, Color]:
        return dict(self.sigma)


def _match_window(
    pattern: Pattern, window: Sequence[tuple[int, Color]]
) -> Optional[dict[str, Color]]:
    binding: dict[str, Color] = {}
    bound: set[Color] = set()
    for (p_side, var), (side, color) in zip(pattern.columns, window):
        if p_side != side:
            return None
        if var in binding:
            if binding[var] is not color:
                return None
        else:
            if color in bound:
                return None
            binding[var] = color
            bound.add(color)
    return binding


def match_pattern(state: GameState, pattern: Pattern) -> Optional[MatchBinding]:
    """First (leftmost; direct before mirrored) occurrence of a pattern.

    Mirrored occurrences — matches against the dual matrix — are
    reported with ``is_dual=True``; a Builder strategy for the pattern
    then applies with all placements reflected.
    """
    if pattern.name == GAME_PATTERN_NAME:
        if len(state.used_colors()) == len(COLORS):
            m = state_matrix(state)
            return MatchBinding(
                pattern=pattern.name,
                column_range=(0, len(m)),
                sigma=(),
                anchor_coords=visible_coords(state),
            )
        return None

    m = state_matrix(state)
    coords = visible_coords(state)
    width = len(pattern)
    for is_dual, mat, pts in (
        (False, m, coords),
        (True, dual(m), tuple(reversed(coords))),
    ):
        for start in range(0, len(mat) - width + 1):
            window = mat.columns[start : start + width]
            binding = _match_window(pattern, window)
            if binding is not None:
                return MatchBinding(
                    pattern=pattern.name,
                    column_range=(start, start + width),
                    sigma=tuple(sorted(binding.items())),
                    anchor_coords=pts[start : start + width],
                    is_dual=is_dual,
                )
    return None


def load_patterns() -> dict[str, Pattern]:
    """Named patterns shipped with the package (see data/patterns.json)."""
    raw = json.loads(
        resources.files("intervalgame.data").joinpath("patterns.json").read_text()
    )
    patterns: dict[str, Pattern] = {}
    for name, entry in raw["patterns"].items():
        cols = tuple(
            (int(tok[0]), tok[1]) for tok in entry["columns"].split()
        )
        patterns[name] = Pattern(name=name, columns=cols)
    patterns[GAME_PATTERN_NAME] = Pattern(name=GAME_PATTERN_NAME, columns=())
    return patterns
