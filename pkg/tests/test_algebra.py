"""State matrices, duals, equivalence, and pattern matching."""

import pytest
from hypothesis import given, settings, strategies as st

from intervalgame.algebra import (
    MatchBinding,
    Pattern,
    StateMatrix,
    canonical_form,
    dual,
    equivalent,
    load_patterns,
    match_pattern,
    state_matrix,
    visible_coords,
)
from intervalgame.coords import Coord, ONE, ZERO
from intervalgame.core import COLORS, Color, new_game


def c(num, k):
    return Coord(num, k)


def play(state, lo, hi, color):
    return state.present(lo, hi).assign(color)


# The explicitly known 7-column milestone window: two interleaved
# three-interval chains in colors a, c, b plus an opening d column.
BD = StateMatrix.decode("1a 0c 1b 0a 1c 0b 0d")


@st.composite
def matrices(draw):
    """Random structurally valid (window) matrices."""
    n = draw(st.integers(0, 6))
    cols = []
    open_count = {}
    for _ in range(2 * n):
        color = draw(st.sampled_from(COLORS))
        if open_count.get(color, 0) > 0 and draw(st.booleans()):
            open_count[color] -= 1
            cols.append((1, color))
        else:
            open_count[color] = open_count.get(color, 0) + 1
            cols.append((0, color))
    return StateMatrix(tuple(cols))


class TestStateMatrix:
    def test_two_crossing_intervals(self):
        state = play(new_game(), c(1, 3), c(3, 3), Color.a)
        state = play(state, c(1, 2), c(1, 1), Color.b)
        m = state_matrix(state)
        assert m.sides == (0, 0, 1, 1)
        assert m.colors == (Color.a, Color.b, Color.a, Color.b)

    def test_empty(self):
        assert len(state_matrix(new_game())) == 0

    def test_walls_hide_columns(self):
        state = play(new_game(), c(1, 3), c(3, 3), Color.a)
        state = play(state, c(1, 2), c(1, 1), Color.b)
        shrunk = state.set_walls(c(5, 4), ONE)
        m = state_matrix(shrunk)
        # 1/8 and 1/4 fall outside; only 3/8 (hi of a) and 1/2 remain.
        assert m.columns == ((1, Color.a), (1, Color.b))

    def test_coords_align_with_columns(self):
        state = play(new_game(), c(1, 3), c(3, 3), Color.a)
        assert visible_coords(state) == (c(1, 3), c(3, 3))


class TestDual:
    def test_reverse_and_flip(self):
        m = StateMatrix.decode("0a 0b 1a 1b")
        assert dual(m) == StateMatrix.decode("0b 0a 1b 1a")

    def test_empty(self):
        assert dual(StateMatrix(())) == StateMatrix(())

    def test_bd_dual_colors(self):
        d = dual(BD)
        assert d.colors == tuple(
            Color(x) for x in ("d", "b", "c", "a", "b", "c", "a")
        )
        assert d.sides == (1, 1, 0, 1, 0, 1, 0)

    @settings(max_examples=200)
    @given(matrices())
    def test_involution(self, m):
        assert dual(dual(m)) == m


class TestEquivalent:
    def test_reflexive(self):
        assert equivalent(BD, BD)

    def test_color_swap(self):
        m1 = StateMatrix.decode("0a 0b 1a 1b")
        m2 = StateMatrix.decode("0b 0a 1b 1a")
        assert equivalent(m1, m2)

    def test_side_mismatch(self):
        assert not equivalent(
            StateMatrix.decode("0a 1a"), StateMatrix.decode("0a 0a")
        )

    def test_non_injective_rejected(self):
        m1 = StateMatrix.decode("0a 0b 1a 1b")
        m2 = StateMatrix.decode("0a 0a 1a 1a")
        assert not equivalent(m1, m2)
        assert not equivalent(m2, m1)

    @settings(max_examples=200)
    @given(matrices(), matrices(), matrices())
    def test_equivalence_relation(self, m1, m2, m3):
        assert equivalent(m1, m1)
        assert equivalent(m1, m2) == equivalent(m2, m1)
        if equivalent(m1, m2) and equivalent(m2, m3):
            assert equivalent(m1, m3)


class TestCanonicalForm:
    def test_first_occurrence_relabel(self):
        m = StateMatrix.decode("0c 0d 1c 1d")
        assert canonical_form(m) == StateMatrix.decode("0a 0b 1a 1b")

    @settings(max_examples=200)
    @given(matrices())
    def test_idempotent(self, m):
        assert canonical_form(canonical_form(m)) == canonical_form(m)

    @settings(max_examples=200)
    @given(matrices(), st.permutations(COLORS))
    def test_permutation_invariant(self, m, perm):
        sigma = dict(zip(COLORS, perm))
        recolored = StateMatrix(
            tuple((s, sigma[color]) for s, color in m.columns)
        )
        assert canonical_form(recolored) == canonical_form(m)

    @settings(max_examples=200)
    @given(matrices(), matrices())
    def test_characterizes_equivalence(self, m1, m2):
        assert equivalent(m1, m2) == (canonical_form(m1) == canonical_form(m2))


def build_bd_state():
    """A concrete position whose window is exactly the bd matrix.

    Geometry (walls shown as |  |): three chained intervals colored
    a, b, c crossing the left wall region, their twins a, b to the
    right, and a d-interval crossing the right wall.
    """
    g = new_game()
    # coordinates chosen on a /2^6 grid
    g = play(g, c(1, 6), c(18, 6), Color.a)                    # [1/64, 18/64]
    g = play(g, c(9, 6), c(30, 6), Color.b)                    # [9/64, 30/64]
    g = play(g, c(24, 6), c(42, 6), Color.c)                   # [24/64, 42/64]
    g = play(g, c(36, 6), c(55, 6), Color.a)                   # [36/64, 55/64]
    g = play(g, c(46, 6), c(59, 6), Color.b)                   # [46/64, 59/64]
    g = play(g, c(50, 6), c(62, 6), Color.d)                   # [50/64, 62/64]
    return g.set_walls(c(13, 6), c(51, 6))


class TestMatchPattern:
    def setup_method(self):
        self.patterns = load_patterns()

    def test_bd_pattern_loaded(self):
        bd = self.patterns["bd"]
        assert [s for s, _ in bd.columns] == [1, 0, 1, 0, 1, 0, 0]

    def test_bd_matches_constructed_state(self):
        state = build_bd_state()
        m = state_matrix(state)
        assert equivalent(m, BD)
        binding = match_pattern(state, self.patterns["bd"])
        assert binding is not None
        assert not binding.is_dual
        assert binding.column_range == (0, 7)
        assert binding.sigma_map() == {
            "a": Color.a,
            "b": Color.b,
            "c": Color.c,
            "d": Color.d,
        }

    def test_empty_state_no_match(self):
        assert match_pattern(new_game(), self.patterns["bd"]) is None

    def test_game_pattern(self):
        game = self.patterns["game"]
        state = new_game(omega=7)
        for i, color in enumerate(COLORS):
            state = play(state, c(4 * i + 1, 6), c(4 * i + 3, 6), color)
        assert match_pattern(state, game) is not None
        assert match_pattern(new_game(), game) is None

    def test_dual_match_flagged(self):
        state = build_bd_state()
        mirrored = mirror_state(state)
        binding = match_pattern(mirrored, self.patterns["bd"])
        assert binding is not None
        assert binding.is_dual

    def test_bd_matches_iff_dual_matches_mirror(self):
        state = build_bd_state()
        mirrored = mirror_state(state)
        direct = match_pattern(state, self.patterns["bd"])
        via_dual = match_pattern(mirrored, self.patterns["bd"])
        assert (direct is not None) == (via_dual is not None)


def mirror_state(state):
    """Reflect a position through the midpoint of the unit segment."""
    from intervalgame.core import GameState, PlacedInterval

    def reflect(p):
        return Coord((1 << p.log2_denominator) - p.numerator, p.log2_denominator)

    intervals = tuple(
        PlacedInterval(
            lo=reflect(iv.hi),
            hi=reflect(iv.lo),
            color=iv.color,
            move_index=iv.move_index,
        )
        for iv in state.intervals
    )
    return GameState(
        intervals=intervals,
        wall_left=reflect(state.wall_right),
        wall_right=reflect(state.wall_left),
        omega=state.omega,
    )


class TestMirrorLaw:
    def test_mirror_matrix_is_dual(self):
        state = build_bd_state()
        assert state_matrix(mirror_state(state)) == dual(state_matrix(state))
