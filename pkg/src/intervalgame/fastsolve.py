"""Combinatorial twin of the forcing-strategy solver.

The geometric solver (:mod:`intervalgame.solver`) manipulates real
interval positions, which is easy to audit but slow.  This module runs
the identical budgeted AND-OR search directly on window signatures:
a position is a tuple of ``(side, color)`` columns plus the count of
colors used only outside the walls.  Everything the search needs is
recoverable from that tuple:

* per color, visible columns alternate open/close (equal-colored
  intervals are disjoint), so each interval's gap range — the interval
  of inter-column gaps it covers — is determined;
* a placement spanning gaps ``i..j`` is contained in an existing
  interval iff some gap range covers ``[i, j]``, contains one iff some
  fully visible pair sits strictly inside, raises the clique to
  ``1 + max`` coverage over ``i..j``, and blocks exactly the colors
  whose gap ranges meet ``[i, j]``;
* colors with no visible column never constrain anything and are
  mutually interchangeable, so only their count matters.

The results are written into the same ``memo`` table format the
geometric solver uses, so ``extract_policy`` (which re-validates every
stored move through the real engine) works on either.  The agreement of
the two move generators is checked against the geometric engine by the
test suite.
"""

from __future__ import annotations

import sys
import time
from typing import Optional

from .core import COLORS, GameState
from .solver import Move, _Entry, mirror_move, signature_of

__all__ = ["FastSolver", "fast_state_of", "encode_fast", "fast_placements"]

# A fast state: (columns, n_extra) with columns a tuple of (side, color_id).
FastState = tuple[tuple[tuple[int, int], ...], int]

_LETTERS = tuple(c.value for c in COLORS)


def fast_state_of(state: GameState) -> FastState:
    """Project a geometric position onto its combinatorial shadow."""
    columns = []
    for iv in state.intervals:
        if state.wall_left < iv.lo < state.wall_right:
            columns.append((iv.lo, 0, iv.color))
        if state.wall_left < iv.hi < state.wall_right:
            columns.append((iv.hi, 1, iv.color))
    columns.sort(key=lambda c: c[0])
    ids: dict = {}
    cols = []
    for _, side, color in columns:
        if color not in ids:
            ids[color] = len(ids)
        cols.append((side, ids[color]))
    n_extra = len(state.used_colors()) - len(ids)
    return (tuple(cols), n_extra)


def encode_fast(cols: tuple[tuple[int, int], ...], n_extra: int) -> str:
    """Same canonical string the geometric ``signature_of`` produces."""
    relabel: dict[int, int] = {}
    out = []
    for side, color in cols:
        if color not in relabel:
            relabel[color] = len(relabel)
        out.append(f"{side}{_LETTERS[relabel[color]]}")
    return "".join(out) + f"|{n_extra}"


def canonical_key(cols, n_extra) -> tuple[str, bool]:
    direct = encode_fast(cols, n_extra)
    mirror = encode_fast(tuple((1 - s, c) for s, c in reversed(cols)), n_extra)
    if mirror < direct:
        return mirror, True
    return direct, False


def _gap_ranges(cols):
    """Per visible interval: (first_gap, last_gap, color, fully_visible).

    Gap ``g`` sits between column ``g - 1`` and column ``g``; an
    interval opening at column ``o`` and closing at column ``c`` covers
    gaps ``o + 1 .. c``; a missing endpoint extends the range to the
    wall on that side.
    """
    w = len(cols)
    pending: dict[int, int] = {}
    ranges = []
    for idx, (side, color) in enumerate(cols):
        if side == 0:
            pending[color] = idx
        elif color in pending:
            ranges.append((pending.pop(color) + 1, idx, color, True))
        else:  # opened left of the window
            ranges.append((0, idx, color, False))
    for color, idx in pending.items():  # closes right of the window
        ranges.append((idx + 1, w, color, False))
    return ranges


def fast_placements(fast: FastState, omega: int):
    """All legal placement types with their canonical reply branches.

    Yields ``(move, replies, fresh_only)`` where each reply is a
    ``FastState``; replies are deduplicated by canonical key, extra
    (outside-only) colors are represented once, and at most one fresh
    color is branched on.
    """
    cols, n_extra = fast
    w = len(cols)
    ranges = _gap_ranges(cols)
    visible = {color for _, color in cols}
    used = len(visible) + n_extra

    coverage = [0] * (w + 2)
    for a, b, _, _ in ranges:
        coverage[a] += 1
        coverage[b + 1] -= 1
    for g in range(1, w + 1):
        coverage[g] += coverage[g - 1]

    out = []
    for i in range(w + 1):
        for j in range(i, w + 1):
            if any(a <= i and b >= j for a, b, _, _ in ranges):
                continue  # the new interval would nest inside this one
            if any(
                full and i + 1 <= a and b <= j - 1
                for a, b, _, full in ranges
            ):
                continue  # this fully visible interval would nest inside
            if 1 + max(coverage[i : j + 1]) > omega:
                continue
            blocked = {
                color for a, b, color, _ in ranges if a <= j and b >= i
            }
            legal_visible = visible - blocked

            def successor(color_id: int, extra_after: int) -> FastState:
                new_cols = (
                    cols[:i]
                    + ((0, color_id),)
                    + cols[i:j]
                    + ((1, color_id),)
                    + cols[j:]
                )
                return (new_cols, extra_after)

            replies: list[FastState] = []
            seen: set[str] = set()
            fresh_id = max(visible, default=-1) + 1
            for color in sorted(legal_visible):
                child = successor(color, n_extra)
                key, _ = canonical_key(*child)
                if key not in seen:
                    seen.add(key)
                    replies.append(child)
            if n_extra > 0:
                child = successor(fresh_id, n_extra - 1)
                key, _ = canonical_key(*child)
                if key not in seen:
                    seen.add(key)
                    replies.append(child)
            if used < len(COLORS):
                child = successor(fresh_id, n_extra)
                key, _ = canonical_key(*child)
                if key not in seen:
                    seen.add(key)
                    replies.append(child)
            fresh_only = not legal_visible and n_extra == 0
            out.append((("place", i, j), replies, fresh_only))
    return out


def fast_wall_moves(fast: FastState):
    """Wall trims, rejecting any that would orphan a spanning interval."""
    cols, n_extra = fast
    w = len(cols)
    ranges = _gap_ranges(cols)
    out = []
    for side in ("L", "R"):
        for k in range(1, w + 1):
            if side == "L":
                kept = cols[k:]
                # An interval closing right of the window whose open
                # column is trimmed would span both walls.
                if any(
                    b == w and not full and a - 1 < k
                    for a, b, _, full in ranges
                ):
                    continue
            else:
                kept = cols[: w - k]
                if any(
                    a == 0 and not full and b >= w - k
                    for a, b, _, full in ranges
                ):
                    continue
            survivors = {color for _, color in kept}
            lost = len({color for _, color in cols} - survivors)
            out.append((("wall", side, k), (kept, n_extra + lost)))
    return out


class FastSolver:
    """Drop-in faster backend for the budgeted AND-OR search.

    Produces a ``memo`` table in the geometric solver's format, keyed
    by canonical signature, with winning moves stored in canonical
    orientation.
    """

    def __init__(
        self,
        omega: int = 4,
        window_cap: int = 10,
        target_colors: int = len(COLORS),
        log: bool = False,
    ):
        self.omega = omega
        self.window_cap = window_cap
        self.target_colors = target_colors
        self.memo: dict[str, _Entry] = {}
        self.nodes = 0
        self.log = log
        self._t0 = time.monotonic()

    def search(self, state: GameState, budget: int) -> Optional[int]:
        return self.search_fast(fast_state_of(state), budget)

    def search_fast(self, fast: FastState, budget: int) -> Optional[int]:
        cols, n_extra = fast
        visible = {color for _, color in cols}
        used = len(visible) + n_extra
        need = self.target_colors - used
        if need <= 0:
            return 0
        if budget < need:
            return None
        key, mirrored = canonical_key(cols, n_extra)
        entry = self.memo.get(key)
        if entry is not None:
            if entry.win is not None and entry.win <= budget:
                return entry.win
            if entry.fail_at >= budget:
                return None
        else:
            entry = self.memo.setdefault(key, _Entry())

        self.nodes += 1
        if self.log and self.nodes % 200_000 == 0:
            dt = time.monotonic() - self._t0
            print(
                f"  ... {self.nodes} nodes, {len(self.memo)} signatures, "
                f"{dt:.0f}s",
                file=sys.stderr,
            )

        width = len(cols)
        candidates = []
        if width + 2 <= self.window_cap:
            for move, replies, fresh_only in fast_placements(fast, self.omega):
                if budget == need and not fresh_only:
                    continue
                rank = (0 if fresh_only else 1, len(replies))
                candidates.append((rank, move, replies))
        for move, child in fast_wall_moves(fast):
            rank = (0 if width + 2 > self.window_cap else 1, 1 + move[2])
            candidates.append((rank, move, child))
        candidates.sort(key=lambda c: c[0])

        for _, move, payload in candidates:
            if move[0] == "wall":
                depth = self.search_fast(payload, budget)
                if depth is not None:
                    self._record_win(key, mirrored, width, move, depth)
                    return depth
            else:
                worst = 0
                for child in payload:
                    depth = self.search_fast(child, budget - 1)
                    if depth is None:
                        worst = None
                        break
                    worst = max(worst, depth)
                if worst is not None:
                    self._record_win(key, mirrored, width, move, worst + 1)
                    return worst + 1
        entry = self.memo[key]
        entry.fail_at = max(entry.fail_at, budget)
        return None

    def _record_win(self, key, mirrored, width, move: Move, depth: int) -> None:
        entry = self.memo[key]
        if entry.win is None or depth < entry.win:
            entry.win = depth
            entry.move = mirror_move(move, width) if mirrored else move
