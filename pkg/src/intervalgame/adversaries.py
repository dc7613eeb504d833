"""Pluggable Algorithm players (the coloring side of the game).

Includes the greedy First-Fit player, a seeded random player, a
scripted player that replays recorded colors, and the canonical reply
enumerator used by the exhaustive verifier: since positions that differ
only by a recoloring are interchangeable, all never-used colors can be
collapsed into a single fresh representative without losing any
adversary behavior.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .core import COLORS, Color, PendingMove
from .traces import ReplayError, Trace

__all__ = [
    "Adversary",
    "first_fit",
    "canonical_moves",
    "first_fit_adversary",
    "random_adversary",
    "scripted_adversary",
    "make_adversary",
    "ADVERSARY_NAMES",
]


@dataclass
class Adversary:
    """A named color-chooser; ``choose`` must return a legal color."""

    name: str
    choose: Callable[[PendingMove], Color]
    seed: Optional[int] = None


def first_fit(pending: PendingMove) -> Color:
    """The alphabetically smallest legal color."""
    return min(pending.legal_colors())


def canonical_moves(pending: PendingMove) -> list[Color]:
    """All legal already-used colors plus at most one fresh color.

    Fresh colors are interchangeable up to recoloring, so one
    representative (the alphabetically first unused color) preserves
    the complete adversary game tree up to equivalence.
    """
    used = pending.base.used_colors()
    legal = pending.legal_colors()
    moves = sorted(c for c in legal if c in used)
    unused = [c for c in COLORS if c not in used]
    if unused:
        moves.append(unused[0])
    return moves


def first_fit_adversary() -> Adversary:
    return Adversary(name="first-fit", choose=first_fit)


def random_adversary(seed: int) -> Adversary:
    rng = random.Random(seed)

    def choose(pending: PendingMove) -> Color:
        return rng.choice(sorted(pending.legal_colors()))

    return Adversary(name=f"random(seed={seed})", choose=choose, seed=seed)


def scripted_adversary(trace: Trace) -> Adversary:
    """Replays the colors of a recorded trace, validating legality."""
    queue: Iterator[Color] = iter(m.color for m in trace.moves)
    counter = {"i": 0}

    def choose(pending: PendingMove) -> Color:
        counter["i"] += 1
        try:
            color = next(queue)
        except StopIteration:
            raise ReplayError(counter["i"], "trace exhausted") from None
        if color not in pending.legal_colors():
            raise ReplayError(counter["i"], f"scripted color {color} is illegal")
        return color

    return Adversary(name="scripted", choose=choose)


ADVERSARY_NAMES = ("first-fit", "random", "scripted")


def make_adversary(
    name: str, seed: Optional[int] = None, trace: Optional[Trace] = None
) -> Adversary:
    """CLI/service factory for adversaries by name."""
    if name == "first-fit":
        return first_fit_adversary()
    if name == "random":
        return random_adversary(seed if seed is not None else 0)
    if name == "scripted":
        if trace is None:
            raise ValueError("scripted adversary requires a trace")
        return scripted_adversary(trace)
    raise ValueError(f"unknown adversary {name!r}; pick from {ADVERSARY_NAMES}")
