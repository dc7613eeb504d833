"""Exact dyadic coordinate arithmetic."""

import pytest
from hypothesis import given, strategies as st

from intervalgame.coords import Coord, CoordOrderError, ONE, ZERO, midpoint


@st.composite
def coords(draw):
    k = draw(st.integers(min_value=0, max_value=24))
    num = draw(st.integers(min_value=0, max_value=1 << k))
    return Coord(num, k)


class TestNormalization:
    def test_zero(self):
        assert Coord(0, 5) == ZERO
        assert str(ZERO) == "0/2^0"

    def test_one(self):
        assert Coord(16, 4) == ONE
        assert str(ONE) == "1/2^0"

    def test_even_numerator_reduced(self):
        assert Coord(6, 3) == Coord(3, 2)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            Coord(5, 2)
        with pytest.raises(ValueError):
            Coord(-1, 0)

    @given(coords())
    def test_numerator_odd_or_zero(self, c):
        assert c.numerator == 0 or c.numerator % 2 == 1 or c == ONE


class TestOrdering:
    def test_basic(self):
        assert Coord(1, 2) < Coord(1, 1) < Coord(3, 2) < ONE

    @given(coords(), coords())
    def test_total_order_matches_value(self, a, b):
        va = a.numerator * (1 << b.log2_denominator)
        vb = b.numerator * (1 << a.log2_denominator)
        assert (a < b) == (va < vb)
        assert (a == b) == (va == vb)

    @given(coords(), coords())
    def test_hash_consistent_with_eq(self, a, b):
        if a == b:
            assert hash(a) == hash(b)


class TestMidpoint:
    def test_unit_interval(self):
        assert midpoint(ZERO, ONE) == Coord(1, 1)

    def test_quarter_half(self):
        assert midpoint(Coord(1, 2), Coord(1, 1)) == Coord(3, 3)

    def test_separation_candidate(self):
        # gaps (0, 1/4) and (1/2, 1) give the candidate [1/8, 3/4]
        lo = midpoint(ZERO, Coord(1, 2))
        hi = midpoint(Coord(1, 1), ONE)
        assert (lo, hi) == (Coord(1, 3), Coord(3, 2))

    def test_invalid_order(self):
        with pytest.raises(CoordOrderError):
            midpoint(ONE, ZERO)
        with pytest.raises(CoordOrderError):
            midpoint(ZERO, ZERO)

    @given(coords(), coords())
    def test_strictly_between(self, a, b):
        if a == b:
            return
        lo, hi = (a, b) if a < b else (b, a)
        m = midpoint(lo, hi)
        assert lo < m < hi


class TestWireFormat:
    @given(coords())
    def test_round_trip(self, c):
        assert Coord.parse(str(c)) == c

    def test_parse_examples(self):
        assert Coord.parse("13/2^5") == Coord(13, 5)
        with pytest.raises(ValueError):
            Coord.parse("0.5")
