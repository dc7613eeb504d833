"""Tests for the exhaustive branch verifier and the greedy-coloring fuzzer."""

import pytest

from intervalgame.core import new_game
from intervalgame.solver import Solver, extract_policy
from intervalgame.verifier import fuzz_first_fit_bound, verify_forced_win


def build_policy(omega: int, target: int) -> dict:
    solver = Solver(omega=omega, window_cap=6, target_colors=target)
    assert solver.search(new_game(omega=omega), budget=2 * target) is not None
    doc = extract_policy(solver, omega)
    return {key: tuple(entry["move"]) for key, entry in doc.items()}


@pytest.fixture(scope="module")
def policy_w2() -> dict:
    return build_policy(omega=2, target=3)


def test_verify_small_game(policy_w2):
    report = verify_forced_win(omega=2, policy=policy_w2, target_colors=3)
    assert report.all_leaves_force_7
    assert report.failures == []
    assert report.total_leaves > 0
    assert report.max_clique_seen <= 2
    assert report.max_depth <= 12  # comfortably small


def test_memo_matches_plain_traversal(policy_w2):
    plain = verify_forced_win(omega=2, policy=policy_w2, target_colors=3)
    memo = verify_forced_win(
        omega=2, policy=policy_w2, target_colors=3, use_memo=True
    )
    assert memo.all_leaves_force_7 and plain.all_leaves_force_7
    assert memo.total_leaves == plain.total_leaves
    assert memo.max_depth == plain.max_depth
    assert memo.max_clique_seen == plain.max_clique_seen
    assert memo.memo_used and not plain.memo_used


def test_broken_policy_reports_failure(policy_w2, tmp_path):
    # Drop one reachable entry: the verifier must notice, not crash.
    broken = dict(policy_w2)
    broken.pop(sorted(broken)[len(broken) // 2])
    report = verify_forced_win(
        omega=2,
        policy=broken,
        target_colors=3,
        export_failures=str(tmp_path),
    )
    if not report.all_leaves_force_7:
        assert report.failures
        assert list(tmp_path.glob("*.json"))
    # (If the dropped signature happened to be unreachable the run still
    # passes; reachability depends on adversary branching.)


def test_fuzz_first_fit_small():
    for omega in (1, 2, 3):
        ok, worst = fuzz_first_fit_bound(omega=omega, n_trials=50, seed=omega)
        assert ok, f"greedy used {worst} colors at omega={omega}"
        assert worst <= 2 * omega - 1
