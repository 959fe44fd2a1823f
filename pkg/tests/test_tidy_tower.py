"""Cube tower tidying: rotation semantics and the exact-optimum solver."""

from collections import deque
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_template, play_builtin
from ppx.core import engine
from ppx.core.types import Difficulty, Phase, PuzzleId, TerminationStatus
from ppx.puzzles.tidy_tower import (
    NUM_COLORS,
    HoldNotAbove,
    IndexOutOfRange,
    Rotate,
    RotateHold,
    colors_from_text,
    colors_to_text,
    minimal_moves,
    tidy_is_solved,
    tidy_rotate,
    tidy_rotate_hold,
)
from ppx.strategies.catalog import make_agent


def bfs_optimum(colors: tuple[int, ...]) -> int:
    """Exhaustive breadth-first distance to a solid tower."""
    n = len(colors)
    seen = {colors}
    frontier = deque([(colors, 0)])
    while frontier:
        cur, depth = frontier.popleft()
        if tidy_is_solved(cur):
            return depth
        nxt = [tidy_rotate(cur, p) for p in range(1, n + 1)]
        nxt += [
            tidy_rotate_hold(cur, p, h)
            for p in range(1, n + 1)
            for h in range(p + 1, n + 1)
        ]
        for cand in nxt:
            if cand not in seen:
                seen.add(cand)
                frontier.append((cand, depth + 1))
    raise AssertionError("tower space is connected; unreachable")


def test_rotate_advances_suffix():
    assert tidy_rotate((0, 1, 2, 3), 3) == (0, 1, 3, 0)
    assert tidy_rotate((0, 0, 0), 1) == (1, 1, 1)


def test_rotate_hold_advances_prefix_only():
    assert tidy_rotate_hold((0, 1, 2, 3), 2, 3) == (1, 2, 2, 3)


def test_rotate_hold_requires_higher_cube():
    with pytest.raises(HoldNotAbove):
        tidy_rotate_hold((0, 1, 2), 2, 2)
    with pytest.raises(HoldNotAbove):
        tidy_rotate_hold((0, 1, 2), 2, 1)


def test_positions_are_validated():
    with pytest.raises(IndexOutOfRange):
        tidy_rotate((0, 1), 3)
    with pytest.raises(IndexOutOfRange):
        tidy_rotate((0, 1), 0)
    with pytest.raises(IndexOutOfRange):
        tidy_rotate_hold((0, 1), 1, 5)


def test_each_operation_changes_one_adjacent_difference():
    colors = (0, 2, 1, 3, 3)
    diffs = lambda cs: [(b - a) % NUM_COLORS for a, b in zip(cs, cs[1:])]
    base = diffs(colors)
    for p in range(1, 6):
        moved = diffs(tidy_rotate(colors, p))
        changed = [i for i, (x, y) in enumerate(zip(base, moved)) if x != y]
        assert len(changed) <= 1
    for p in range(1, 6):
        for h in range(p + 1, 6):
            moved = diffs(tidy_rotate_hold(colors, p, h))
            changed = [i for i, (x, y) in enumerate(zip(base, moved)) if x != y]
            assert len(changed) == 1


def test_minimal_moves_matches_bfs_on_all_short_towers():
    for n in (2, 3):
        for colors in product(range(NUM_COLORS), repeat=n):
            assert minimal_moves(colors) == bfs_optimum(colors), colors


def test_minimal_moves_solved_tower_is_zero():
    assert minimal_moves((2, 2, 2, 2)) == 0


def test_color_text_roundtrip():
    assert colors_from_text("RGBY") == (0, 3, 2, 1)
    assert colors_to_text(colors_from_text("RYBGRYBG")) == "RYBGRYBG"


def test_mixed_fourteen_cube_instance_needs_thirteen():
    # alternating four-colour pattern: every adjacent difference is one step
    assert minimal_moves(colors_from_text("RGBYRGBYBGBGBG")) == 13


def test_budget_equals_optimum_and_dp_agent_spends_it_exactly():
    for seed in range(1, 21):
        template = make_template(PuzzleId.TIDY_TOWER, Difficulty.EASY, seed=seed)
        state = engine.instantiate(template)
        assert state.budget == minimal_moves(state.colors)
        record = play_builtin(template, [make_agent(PuzzleId.TIDY_TOWER, "dp")])
        assert record.raw_scores == (1.0,)
        assert len(record.trajectory) == state.budget


def test_failing_to_solve_scores_zero():
    template = make_template(PuzzleId.TIDY_TOWER, Difficulty.EASY, seed=5)
    state = engine.instantiate(template)
    wasted = state
    for _ in range(state.budget):
        wasted, feedback = engine.step(wasted, Rotate(len(state.colors)))
        if wasted.phase is Phase.FINISHED:
            break
    assert wasted.phase is Phase.FINISHED
    if not tidy_is_solved(wasted.colors):
        assert feedback.outcome.solo_score == 0.0


def test_move_text_roundtrip():
    from ppx.core.rules import rules_for

    rules = rules_for(PuzzleId.TIDY_TOWER)
    for move in (Rotate(3), RotateHold(2, 7)):
        assert rules.parse_move(rules.move_to_text(move)) == move


@given(st.lists(st.integers(min_value=0, max_value=3), min_size=2, max_size=5))
@settings(max_examples=60, deadline=None)
def test_minimal_moves_never_beats_bfs(colors):
    colors = tuple(colors)
    assert minimal_moves(colors) == bfs_optimum(colors)
