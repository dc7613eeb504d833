"""ASCII rendering of positions: one bar per interval, wall markers."""

from __future__ import annotations

from .coords import Coord
from .core import GameState

__all__ = ["render_state", "render_matrix"]


def render_state(state: GameState, width: int = 72) -> str:
    """Draw intervals as horizontal bars in presentation order.

    Positions are scaled proportionally; the exact engine never uses
    these approximate positions.
    """
    if not state.intervals:
        return "(empty board)\n"

    def col(p: Coord) -> int:
        return round(p.as_float() * (width - 1))

    lines = []
    axis = [" "] * width
    for wall in (state.wall_left, state.wall_right):
        axis[col(wall)] = "|"
    lines.append("".join(axis) + "   walls")
    for iv in state.intervals:
        lo, hi = col(iv.lo), col(iv.hi)
        hi = max(hi, lo + 1)
        row = [" "] * width
        for x in range(lo, hi + 1):
            row[x] = "-"
        row[lo] = "["
        row[hi] = "]"
        mid = (lo + hi) // 2
        row[mid] = iv.color.value
        lines.append(
            "".join(row) + f"   #{iv.move_index} {iv.color.value} "
            f"[{iv.lo}, {iv.hi}]"
        )
    return "\n".join(lines) + "\n"


def render_matrix(state: GameState) -> str:
    """Print the wall-restricted endpoint matrix as two rows."""
    from .algebra import state_matrix

    m = state_matrix(state)
    if not len(m):
        return "(empty matrix)\n"
    sides = " ".join(str(s) for s in m.sides)
    colors = " ".join(c.value for c in m.colors)
    return f"sides:  {sides}\ncolors: {colors}\n"
