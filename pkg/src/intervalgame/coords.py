"""Exact dyadic-rational coordinates on the unit segment.

Every endpoint and wall position in the game is a dyadic rational
``numerator / 2**log2_denominator`` in ``[0, 1]``.  All placements are
constructed from midpoints of existing points, and dyadic rationals are
closed under midpoints, so every comparison the engine makes is exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

__all__ = ["Coord", "CoordOrderError", "midpoint", "ZERO", "ONE"]


class CoordOrderError(ValueError):
    """Raised when an operation requires strictly ordered coordinates."""


@total_ordering
@dataclass(frozen=True)
class Coord:
    """A dyadic rational ``numerator / 2**log2_denominator`` in [0, 1].

    The representation is normalized: the numerator is odd or zero, and
    the denominator exponent is as small as possible.  Normalization
    makes structural equality coincide with numeric equality.
    """

    numerator: int
    log2_denominator: int = 0

    def __post_init__(self) -> None:
        num, k = self.numerator, self.log2_denominator
        if num < 0 or k < 0:
            raise ValueError(f"negative components: {num}/2^{k}")
        while num != 0 and num % 2 == 0 and k > 0:
            num //= 2
            k -= 1
        if num == 0:
            k = 0
        if num > (1 << k):
            raise ValueError(f"{num}/2^{k} lies outside [0, 1]")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "log2_denominator", k)

    # -- ordering ---------------------------------------------------------
    def _scaled(self, k: int) -> int:
        return self.numerator << (k - self.log2_denominator)

    def __lt__(self, other: "Coord") -> bool:
        k = max(self.log2_denominator, other.log2_denominator)
        return self._scaled(k) < other._scaled(k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coord):
            return NotImplemented
        return (
            self.numerator == other.numerator
            and self.log2_denominator == other.log2_denominator
        )

    def __hash__(self) -> int:
        return hash((self.numerator, self.log2_denominator))

    # -- serialization ----------------------------------------------------
    def __str__(self) -> str:
        return f"{self.numerator}/2^{self.log2_denominator}"

    def __repr__(self) -> str:
        return f"Coord({self})"

    def as_float(self) -> float:
        """Approximate value, for rendering only (never for comparisons)."""
        return self.numerator / (1 << self.log2_denominator)

    _PATTERN = re.compile(r"^(\d+)/2\^(\d+)$")

    @classmethod
    def parse(cls, text: str) -> "Coord":
        """Parse the exact wire format ``"num/2^k"``."""
        m = cls._PATTERN.match(text.strip())
        if m is None:
            raise ValueError(f"not a dyadic coordinate: {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))


ZERO = Coord(0)
ONE = Coord(1)


def midpoint(a: Coord, b: Coord) -> Coord:
    """Exact midpoint ``(a + b) / 2``; requires ``a < b``."""
    if not a < b:
        raise CoordOrderError(f"midpoint requires a < b, got {a} >= {b}")
    k = max(a.log2_denominator, b.log2_denominator)
    num = a._scaled(k) + b._scaled(k)
    return Coord(num, k + 1)
