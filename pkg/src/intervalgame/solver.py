"""Forcing-strategy solver: discovers Builder's winning policy.

The solver searches the Builder-vs-all-adversaries game tree for a
strategy that forces all seven colors at clique bound 4.  Two ideas
keep the search desk-scale:

* **Window signatures.**  Everything that matters for the rest of the
  game is captured by the wall-restricted endpoint matrix plus the
  number of colors used only outside the walls: intervals wholly
  outside the walls can never touch a future placement, partially
  visible intervals appear as unmatched matrix columns, and point
  coverage inside the walls is recoverable from the matrix.  Signatures
  are canonicalized up to recoloring and mirroring, which makes them
  memoization keys (equivalent positions share one proof) and lets the
  final policy be a plain ``signature -> move`` table.

* **Canonical replies.**  At each presented interval the adversary
  branches over every legal already-used color plus one fresh
  representative; branches are deduplicated by successor signature.

Builder moves are combinatorial placement types — a pair of gaps
between consecutive visible endpoints for the new interval's ends,
realized as exact midpoints — plus wall moves that trim columns off
either edge of the window.  Wall moves cost no presentation; they exist
to let positions with interchangeable walled-off colors converge to the
same signature.

Run ``python -m intervalgame.solver`` to (re)derive the policy shipped
in ``data/strategy.json``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .adversaries import canonical_moves
from .algebra import visible_coords
from .coords import Coord, midpoint
from .core import COLORS, Color, GameError, GameState, PendingMove, new_game

__all__ = [
    "Signature",
    "signature_of",
    "gap_bounds",
    "realize_placement",
    "apply_move",
    "mirror_move",
    "Solver",
    "extract_policy",
]

# A move is either ("place", lo_gap, hi_gap) or ("wall", "L"|"R", k)
Move = tuple


@dataclass(frozen=True)
class Signature:
    """Canonical summary of a position as seen through its walls."""

    key: str
    mirrored: bool  # canonical form is the mirror of the actual window
    width: int  # number of visible endpoint columns
    used: int  # total distinct colors used anywhere
    n_extra: int  # used colors with no visible endpoint


def _encode(columns: list[tuple[int, Color]], n_extra: int) -> str:
    relabel: dict[Color, int] = {}
    out = []
    for side, color in columns:
        if color not in relabel:
            relabel[color] = len(relabel)
        out.append(f"{side}{COLORS[relabel[color]].value}")
    return "".join(out) + f"|{n_extra}"


def signature_of(state: GameState) -> Signature:
    columns: list[tuple[Coord, int, Color]] = []
    for iv in state.intervals:
        if state.wall_left < iv.lo < state.wall_right:
            columns.append((iv.lo, 0, iv.color))
        if state.wall_left < iv.hi < state.wall_right:
            columns.append((iv.hi, 1, iv.color))
    columns.sort(key=lambda c: c[0])
    cols = [(side, color) for _, side, color in columns]
    visible = {color for _, color in cols}
    used = state.used_colors()
    n_extra = len(used) - len(visible)
    direct = _encode(cols, n_extra)
    mirror = _encode([(1 - s, c) for s, c in reversed(cols)], n_extra)
    if mirror < direct:
        return Signature(mirror, True, len(cols), len(used), n_extra)
    return Signature(direct, False, len(cols), len(used), n_extra)


def gap_bounds(state: GameState) -> list[tuple[Coord, Coord]]:
    """The open gaps between walls and consecutive visible endpoints."""
    pts = [state.wall_left, *visible_coords(state), state.wall_right]
    return list(zip(pts, pts[1:]))


def realize_placement(
    state: GameState, lo_gap: int, hi_gap: int
) -> Optional[PendingMove]:
    """Realize a placement type with midpoint coordinates, or None if illegal."""
    gaps = gap_bounds(state)
    if not (0 <= lo_gap <= hi_gap < len(gaps)):
        return None
    if lo_gap == hi_gap:
        a, b = gaps[lo_gap]
        m = midpoint(a, b)
        lo, hi = midpoint(a, m), midpoint(m, b)
    else:
        lo = midpoint(*gaps[lo_gap])
        hi = midpoint(*gaps[hi_gap])
    try:
        return state.present(lo, hi)
    except GameError:
        return None


def apply_wall(state: GameState, side: str, k: int) -> Optional[GameState]:
    """Trim ``k`` columns off one edge of the window, or None if invalid.

    A trim is rejected when it would leave an interval overhanging both
    walls at once: such an interval blocks its color across the whole
    window while being invisible in the matrix, so the signature would
    no longer summarize the position faithfully.
    """
    gaps = gap_bounds(state)
    width = len(gaps) - 1
    if not (1 <= k <= width):
        return None
    if side == "L":
        new_left, new_right = midpoint(*gaps[k]), state.wall_right
    elif side == "R":
        new_left, new_right = state.wall_left, midpoint(*gaps[width - k])
    else:
        return None
    for iv in state.intervals:
        if iv.lo < new_left and iv.hi > new_right:
            return None
    return state.set_walls(new_left, new_right)


def mirror_move(move: Move, width: int) -> Move:
    """Translate a move between a window and its mirror image."""
    if move[0] == "place":
        _, lo_gap, hi_gap = move
        return ("place", width - hi_gap, width - lo_gap)
    _, side, k = move
    return ("wall", "R" if side == "L" else "L", k)


def apply_move(state: GameState, move: Move) -> Optional[object]:
    """Apply a move in actual orientation: PendingMove, GameState or None."""
    if move[0] == "place":
        return realize_placement(state, move[1], move[2])
    return apply_wall(state, move[1], move[2])


@dataclass
class _Entry:
    win: Optional[int] = None  # presentations needed, if proven winnable
    move: Optional[Move] = None  # winning move, in canonical orientation
    fail_at: int = -1  # largest budget at which no win was found


class Solver:
    """Budgeted AND-OR search with signature memoization."""

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

    # -- move generation --------------------------------------------------
    def _placements(self, state: GameState, sig: Signature):
        """Legal placement types with their deduplicated reply branches."""
        n_gaps = sig.width + 1
        out = []
        for lo_gap in range(n_gaps):
            for hi_gap in range(lo_gap, n_gaps):
                pending = realize_placement(state, lo_gap, hi_gap)
                if pending is None:
                    continue
                replies: list[tuple[Color, GameState, Signature]] = []
                seen: set[str] = set()
                fresh_only = True
                used = state.used_colors()
                for color in canonical_moves(pending):
                    child = pending.assign(color)
                    child_sig = signature_of(child)
                    if child_sig.key in seen:
                        continue
                    seen.add(child_sig.key)
                    replies.append((color, child, child_sig))
                    if color in used:
                        fresh_only = False
                move = ("place", lo_gap, hi_gap)
                out.append((move, replies, fresh_only))
        return out

    def _wall_moves(self, state: GameState, sig: Signature):
        out = []
        for side in ("L", "R"):
            for k in range(1, sig.width + 1):
                child = apply_wall(state, side, k)
                if child is None:
                    continue
                child_sig = signature_of(child)
                if child_sig.key == sig.key:
                    continue
                out.append((("wall", side, k), child, child_sig))
        return out

    # -- search -----------------------------------------------------------
    def search(self, state: GameState, budget: int) -> Optional[int]:
        """Presentations Builder needs to force 7 colors, if <= budget."""
        sig = signature_of(state)
        return self._search(state, sig, budget)

    def _search(self, state: GameState, sig: Signature, budget: int) -> Optional[int]:
        need = self.target_colors - sig.used
        if need <= 0:
            return 0
        if budget < need:
            return None
        entry = self.memo.get(sig.key)
        if entry is not None:
            if entry.win is not None and entry.win <= budget:
                return entry.win
            if entry.fail_at >= budget:
                return None
        else:
            entry = self.memo.setdefault(sig.key, _Entry())

        self.nodes += 1
        if self.log and self.nodes % 50_000 == 0:
            dt = time.monotonic() - self._t0
            print(
                f"  ... {self.nodes} nodes, {len(self.memo)} signatures, "
                f"{dt:.0f}s",
                file=sys.stderr,
            )

        candidates: list[tuple[tuple, Move, object]] = []
        if sig.width + 2 <= self.window_cap:
            for move, replies, fresh_only in self._placements(state, sig):
                if budget == need and not fresh_only:
                    continue
                # Prefer moves that force fresh colors, then fewer replies.
                rank = (0 if fresh_only else 1, len(replies))
                candidates.append((rank, move, replies))
        for move, child, child_sig in self._wall_moves(state, sig):
            # Wall moves cost nothing but only discard options; try them
            # after forcing placements, before weak ones.
            rank = (0 if sig.width + 2 > self.window_cap else 1, 1 + move[2])
            candidates.append((rank, move, (child, child_sig)))
        candidates.sort(key=lambda c: c[0])

        for _, move, payload in candidates:
            if move[0] == "wall":
                child, child_sig = payload
                depth = self._search(child, child_sig, budget)
                if depth is not None:
                    self._record_win(sig, move, depth)
                    return depth
            else:
                replies = payload
                worst = 0
                for _, child, child_sig in replies:
                    depth = self._search(child, child_sig, budget - 1)
                    if depth is None:
                        worst = None
                        break
                    worst = max(worst, depth)
                if worst is not None:
                    self._record_win(sig, move, worst + 1)
                    return worst + 1
        entry = self.memo[sig.key]
        entry.fail_at = max(entry.fail_at, budget)
        return None

    def _record_win(self, sig: Signature, move: Move, depth: int) -> None:
        entry = self.memo[sig.key]
        if entry.win is None or depth < entry.win:
            entry.win = depth
            entry.move = mirror_move(move, sig.width) if sig.mirrored else move


def extract_policy(solver: Solver, omega: int = 4) -> dict[str, dict]:
    """Walk the winning closure from the empty position into a policy table.

    The table maps every reachable canonical signature to the winning
    move (expressed in canonical orientation) and the number of
    presentations still needed.
    """
    policy: dict[str, dict] = {}
    stack = [new_game(omega=omega)]
    while stack:
        state = stack.pop()
        sig = signature_of(state)
        need = solver.target_colors - sig.used
        if need <= 0:
            continue
        if sig.key in policy:
            continue
        entry = solver.memo.get(sig.key)
        if entry is None or entry.win is None or entry.move is None:
            raise RuntimeError(
                f"policy extraction reached an unsolved signature {sig.key}"
            )
        policy[sig.key] = {"move": list(entry.move), "win": entry.win}
        move = mirror_move(entry.move, sig.width) if sig.mirrored else entry.move
        result = apply_move(state, move)
        if result is None:
            raise RuntimeError(f"stored move {entry.move} illegal at {sig.key}")
        if isinstance(result, GameState):
            stack.append(result)
        else:
            seen: set[str] = set()
            for color in canonical_moves(result):
                child = result.assign(color)
                child_sig = signature_of(child)
                if child_sig.key in seen:
                    continue
                seen.add(child_sig.key)
                stack.append(child)
    return policy


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        description="Derive the Builder forcing policy by exhaustive search."
    )
    parser.add_argument("--budget", type=int, default=17,
                        help="maximum presentations allowed (default 17)")
    parser.add_argument("--window-cap", type=int, default=10,
                        help="maximum visible endpoint columns (default 10)")
    parser.add_argument("--omega", type=int, default=4)
    parser.add_argument("--target-colors", type=int, default=len(COLORS))
    parser.add_argument("--out", type=str, default=None,
                        help="write the policy JSON here")
    parser.add_argument("--engine", choices=("fast", "geometric"),
                        default="fast",
                        help="search backend (both produce identical "
                             "policies; 'geometric' is the slow oracle)")
    args = parser.parse_args(argv)

    if args.engine == "fast":
        from .fastsolve import FastSolver as Backend
    else:
        Backend = Solver
    solver = Backend(omega=args.omega, window_cap=args.window_cap,
                     target_colors=args.target_colors, log=True)
    t0 = time.monotonic()
    depth = solver.search(new_game(omega=args.omega), args.budget)
    dt = time.monotonic() - t0
    print(
        f"nodes={solver.nodes} signatures={len(solver.memo)} time={dt:.1f}s",
        file=sys.stderr,
    )
    if depth is None:
        print(f"no forcing strategy found within budget {args.budget}")
        return 1
    print(f"forcing strategy found: {depth} presentations suffice")
    policy = extract_policy(solver, omega=args.omega)
    print(f"policy table: {len(policy)} signatures")
    if args.out:
        doc = {
            "version": 1,
            "omega": args.omega,
            "presentations": depth,
            "window_cap": args.window_cap,
            "policy": policy,
        }
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
        print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
