"""The combinatorial solver backend must agree with the geometric engine.

The geometric engine is the oracle: these tests replay random games
through real interval positions and check that the signature-level move
generator produces exactly the same legal placements, adversary reply
classes, and wall moves.
"""

import random

import pytest

from intervalgame.adversaries import canonical_moves
from intervalgame.core import new_game
from intervalgame.fastsolve import (
    FastSolver,
    canonical_key,
    fast_placements,
    fast_state_of,
    fast_wall_moves,
)
from intervalgame.solver import (
    Solver,
    apply_wall,
    extract_policy,
    realize_placement,
    signature_of,
)
from intervalgame.verifier import verify_forced_win


def random_states(omega: int, seed: int, n_games: int = 8, depth: int = 8):
    """Random legal positions reached by arbitrary play, walls included."""
    rng = random.Random(seed)
    for g in range(n_games):
        state = new_game(omega=omega)
        yield state
        for step in range(depth):
            width = len(signature_of(state).key.split("|")[0]) // 2
            pairs = [
                (i, j)
                for i in range(width + 1)
                for j in range(i, width + 1)
            ]
            rng.shuffle(pairs)
            pending = None
            for i, j in pairs:
                pending = realize_placement(state, i, j)
                if pending is not None:
                    break
            if pending is None:
                break
            color = rng.choice(sorted(pending.legal_colors()))
            state = pending.assign(color)
            if rng.random() < 0.25:
                side = rng.choice(("L", "R"))
                trimmed = apply_wall(state, side, rng.randint(1, 3))
                if trimmed is not None:
                    state = trimmed
            yield state


def geometric_moves(state):
    """Placements and walls exactly as the geometric solver sees them."""
    sig = signature_of(state)
    placements = {}
    for i in range(sig.width + 1):
        for j in range(i, sig.width + 1):
            pending = realize_placement(state, i, j)
            if pending is None:
                continue
            keys = set()
            for color in canonical_moves(pending):
                keys.add(signature_of(pending.assign(color)).key)
            placements[(i, j)] = keys
    walls = {}
    for side in ("L", "R"):
        for k in range(1, sig.width + 1):
            child = apply_wall(state, side, k)
            if child is not None:
                walls[(side, k)] = signature_of(child).key
    return placements, walls


def fast_moves(state, omega):
    fast = fast_state_of(state)
    placements = {
        (move[1], move[2]): {canonical_key(*child)[0] for child in replies}
        for move, replies, _ in fast_placements(fast, omega)
    }
    walls = {
        (move[1], move[2]): canonical_key(*child)[0]
        for move, child in fast_wall_moves(fast)
    }
    return placements, walls


@pytest.mark.parametrize("omega,seed", [(2, 1), (3, 2), (4, 3), (4, 4)])
def test_move_generation_parity(omega, seed):
    checked = 0
    for state in random_states(omega, seed):
        g_place, g_wall = geometric_moves(state)
        f_place, f_wall = fast_moves(state, omega)
        assert f_place == g_place, f"placements differ at {signature_of(state)}"
        assert f_wall == g_wall, f"wall moves differ at {signature_of(state)}"
        checked += 1
    assert checked > 10


def test_fast_signature_matches_geometric():
    for state in random_states(4, seed=99):
        cols, n_extra = fast_state_of(state)
        assert canonical_key(cols, n_extra)[0] == signature_of(state).key


@pytest.mark.parametrize("omega,target,min_budget", [(2, 3, 4), (3, 5, 7)])
def test_fast_solver_matches_geometric_results(omega, target, min_budget):
    fast = FastSolver(omega=omega, window_cap=8, target_colors=target)
    slow = Solver(omega=omega, window_cap=8, target_colors=target)
    start = new_game(omega=omega)
    assert fast.search(start, min_budget - 1) is None
    assert slow.search(start, min_budget - 1) is None
    fast2 = FastSolver(omega=omega, window_cap=8, target_colors=target)
    slow2 = Solver(omega=omega, window_cap=8, target_colors=target)
    assert fast2.search(start, min_budget) == min_budget
    assert slow2.search(start, min_budget) == min_budget


def test_fast_policy_verifies():
    solver = FastSolver(omega=2, window_cap=8, target_colors=3)
    assert solver.search(new_game(omega=2), budget=6) is not None
    doc = extract_policy(solver, omega=2)
    policy = {key: tuple(entry["move"]) for key, entry in doc.items()}
    report = verify_forced_win(omega=2, policy=policy, target_colors=3)
    assert report.all_leaves_force_7
    assert report.failures == []
