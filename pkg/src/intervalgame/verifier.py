"""Exhaustive verification that the master strategy forces seven colors.

The verifier replays the policy against *every* canonical adversary:
at each presented interval it branches over all legal already-used
colors plus one fresh representative (complete up to recoloring), and
checks that every leaf uses all seven colors without ever breaking a
geometric rule.  The optional memoization caches subtree results by
canonical window signature — sound because the policy itself is a
function of the signature — and aggregates the same statistics the
plain traversal would produce.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from typing import Optional

from .adversaries import canonical_moves, first_fit
from .core import COLORS, Color, GameError, GameState, new_game
from .coords import midpoint
from .solver import gap_bounds, realize_placement, signature_of
from .strategies import Session, StrategyInconsistencyError, load_policy
from .traces import Trace, TraceMove, replay

__all__ = ["VerificationReport", "verify_forced_win", "fuzz_first_fit_bound"]

# Hard cap on presentations along any branch; the policy's recorded
# depth is far below this, so hitting it indicates a cycle bug.
MAX_PRESENTATIONS = 64


@dataclass
class VerificationReport:
    omega: int = 4
    all_leaves_force_7: bool = True
    total_leaves: int = 0
    max_depth: int = 0
    max_intervals: int = 0
    max_clique_seen: int = 0
    memo_used: bool = False
    memo_hits: int = 0
    nodes_visited: int = 0
    duration_seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(self.__dict__, indent=2)

    def summary(self) -> str:
        status = "PASS" if self.all_leaves_force_7 else "FAIL"
        return (
            f"[{status}] omega={self.omega}: {self.total_leaves} adversary "
            f"branches, max depth {self.max_depth} presentations, "
            f"max clique {self.max_clique_seen}, "
            f"{self.duration_seconds:.1f}s"
            + (f", {self.memo_hits} memo hits" if self.memo_used else "")
        )


@dataclass(frozen=True)
class _SubtreeStats:
    leaves: int
    depth: int  # max presentations below this node
    clique: int  # max point coverage created at any presentation below


class _Failure(Exception):
    def __init__(self, message: str, trace: Trace):
        super().__init__(message)
        self.trace = trace


def verify_forced_win(
    omega: int = 4,
    use_memo: bool = False,
    export_failures: Optional[str] = None,
    policy: Optional[dict] = None,
    target_colors: int = len(COLORS),
) -> VerificationReport:
    """Explore all canonical adversary branches against the policy."""
    policy = policy if policy is not None else load_policy()
    report = VerificationReport(omega=omega, memo_used=use_memo)
    memo: dict[str, _SubtreeStats] = {}
    t0 = time.monotonic()

    def explore(session: Session, presentations: int) -> _SubtreeStats:
        report.nodes_visited += 1
        state = session.state
        if len(state.used_colors()) >= target_colors:
            return _SubtreeStats(leaves=1, depth=0, clique=0)
        if presentations >= MAX_PRESENTATIONS:
            raise _Failure("presentation cap exceeded", session.trace())
        if use_memo:
            sig = signature_of(state)
            cached = memo.get(sig.key)
            if cached is not None:
                report.memo_hits += 1
                return cached
        try:
            pending = session.next_pending(policy)
        except StrategyInconsistencyError as exc:
            raise _Failure(str(exc), session.trace()) from exc
        leaves = 0
        depth = 0
        clique = 0
        for color in canonical_moves(pending):
            child = Session(
                state=pending.assign(color),
                moves=session.moves
                + [TraceMove(lo=pending.lo, hi=pending.hi, color=color)],
            )
            # Coverage peaks only inside a newly presented interval, so
            # the global clique number equals the max over presentations
            # of the local coverage across the new span.
            local = _span_coverage(child.state, pending.lo, pending.hi)
            sub = explore(child, presentations + 1)
            leaves += sub.leaves
            depth = max(depth, sub.depth + 1)
            clique = max(clique, local, sub.clique)
        stats = _SubtreeStats(leaves=leaves, depth=depth, clique=clique)
        if use_memo:
            memo[sig.key] = stats
        return stats

    session = Session.new(omega=omega)
    try:
        stats = explore(session, 0)
        report.total_leaves = stats.leaves
        report.max_depth = stats.depth
        report.max_intervals = stats.depth
        report.max_clique_seen = stats.clique
    except _Failure as failure:
        report.all_leaves_force_7 = False
        report.failures.append(str(failure))
        if export_failures:
            os.makedirs(export_failures, exist_ok=True)
            path = os.path.join(
                export_failures, f"failure-{len(report.failures)}.json"
            )
            with open(path, "w") as fh:
                fh.write(failure.trace.to_json())
            report.failures.append(f"trace written to {path}")
    report.duration_seconds = time.monotonic() - t0
    return report


def _span_coverage(state: GameState, lo, hi) -> int:
    """Maximum point coverage within ``[lo, hi]``."""
    depth = sum(
        1 for iv in state.intervals if not lo < iv.lo and not iv.hi < lo
    )
    best = depth
    events = []
    for iv in state.intervals:
        if lo < iv.lo and not hi < iv.lo:
            events.append((iv.lo, 0))
        if lo < iv.hi and not hi < iv.hi:
            events.append((iv.hi, 1))
    events.sort(key=lambda e: (e[0], e[1]))
    for _, kind in events:
        depth = depth + 1 if kind == 0 else depth - 1
        best = max(best, depth)
    return best


def fuzz_first_fit_bound(
    omega: int, n_trials: int, seed: int = 0, moves_per_trial: int = 24
) -> tuple[bool, int]:
    """Random containment-free presentations colored greedily.

    Returns ``(ok, worst)`` where ``ok`` means the greedy player never
    needed more than ``2 * omega - 1`` colors and ``worst`` is the
    largest number of colors observed.

    Runs on the combinatorial window representation (an unwalled
    position is exactly its column sequence) with an unbounded integer
    palette: at omega = 5 the greedy player may legitimately need nine
    colors, more than the seven-color game alphabet.  The placement
    legality rules used here are the ones parity-tested against the
    geometric engine in the fast-solver test suite.
    """
    import random

    from .fastsolve import _gap_ranges

    rng = random.Random(seed)
    worst = 0
    for _ in range(n_trials):
        cols: list[tuple[int, int]] = []
        used: set[int] = set()
        for _ in range(moves_per_trial):
            w = len(cols)
            ranges = _gap_ranges(tuple(cols))
            coverage = [0] * (w + 2)
            for a, b, _, _ in ranges:
                coverage[a] += 1
                coverage[b + 1] -= 1
            for g in range(1, w + 1):
                coverage[g] += coverage[g - 1]
            options = [(i, j) for i in range(w + 1) for j in range(i, w + 1)]
            rng.shuffle(options)
            placed = False
            for i, j in options:
                if any(a <= i and b >= j for a, b, _, _ in ranges):
                    continue  # nested inside an existing interval
                if any(
                    full and i + 1 <= a and b <= j - 1
                    for a, b, _, full in ranges
                ):
                    continue  # would contain an existing interval
                if 1 + max(coverage[i : j + 1]) > omega:
                    continue
                blocked = {
                    color for a, b, color, _ in ranges if a <= j and b >= i
                }
                color = 0
                while color in blocked:
                    color += 1
                cols = cols[:i] + [(0, color)] + cols[i:j] + [(1, color)] + cols[j:]
                used.add(color)
                placed = True
                break
            if not placed:
                break
        worst = max(worst, len(used))
        if len(used) > 2 * omega - 1:
            return False, worst
    return True, worst
