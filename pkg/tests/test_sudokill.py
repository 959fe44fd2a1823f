"""Sudoku-elimination duel: validity, adjacency rule, generator, endings."""

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_template, play_builtin
from ppx.core import engine
from ppx.core.rules import rules_for
from ppx.core.types import Difficulty, Phase, PuzzleId, TerminationStatus
from ppx.puzzles.sudokill import (
    Place,
    sudokill_allowed_cells,
    sudokill_is_valid,
)
from ppx.strategies.base import RandomAgent

# 9x9 mid-game position; the last digit landed in the top-right corner.
GRID_A = (
    (6, 8, 4, 5, 1, 3, 2, 7, 9),
    (5, 9, 7, 6, 2, 0, 1, 8, 0),
    (2, 3, 1, 4, 8, 7, 6, 5, 0),
    (9, 1, 2, 7, 6, 4, 8, 0, 3),
    (4, 6, 8, 3, 0, 1, 7, 2, 5),
    (7, 5, 3, 2, 9, 8, 4, 1, 6),
    (8, 4, 5, 1, 3, 2, 9, 6, 7),
    (1, 0, 6, 9, 0, 5, 0, 3, 8),
    (3, 2, 0, 0, 7, 0, 5, 4, 0),
)


def with_cell(grid, r, c, v):
    row = grid[r][:c] + (v,) + grid[r][c + 1 :]
    return grid[:r] + (row,) + grid[r + 1 :]


def test_allowed_cells_after_corner_move():
    assert set(sudokill_allowed_cells(GRID_A, (0, 8))) == {(1, 8), (2, 8), (8, 8)}


def test_allowed_cells_fall_back_to_all_empties():
    # a last move whose row and column are otherwise full frees the board
    grid = with_cell(GRID_A, 8, 8, 1)
    empties = {(r, c) for r in range(9) for c in range(9) if grid[r][c] == 0}
    row_col = set(sudokill_allowed_cells(grid, (8, 8)))
    assert row_col <= empties
    assert set(sudokill_allowed_cells(grid, None)) == empties


def test_killer_placement_leaves_no_valid_reply():
    # placing a 4 high in the last column starves every reachable cell
    grid = with_cell(GRID_A, 8, 8, 1)
    assert sudokill_is_valid(grid, 1, 8, 4)
    after = with_cell(grid, 1, 8, 4)
    for r, c in sudokill_allowed_cells(after, (1, 8)):
        assert not any(sudokill_is_valid(after, r, c, v) for v in range(1, 10))


def test_validity_checks_row_column_box():
    assert not sudokill_is_valid(GRID_A, 1, 5, 2)  # 2 already in row 1
    assert not sudokill_is_valid(GRID_A, 1, 5, 3)  # 3 in column 5
    assert not sudokill_is_valid(GRID_A, 1, 5, 5)  # 5 in the top-middle box
    # row + column + box leave exactly one digit open here
    assert [v for v in range(1, 10) if sudokill_is_valid(GRID_A, 8, 2, v)] == [9]
    assert [v for v in range(1, 10) if sudokill_is_valid(GRID_A, 7, 1, v)] == [7]


def test_generator_leaves_known_fraction_empty():
    for diff, side, fraction in (
        (Difficulty.EASY, 4, 0.5),
        (Difficulty.NORMAL, 9, 0.6),
    ):
        state = engine.instantiate(make_template(PuzzleId.SUDOKILL, diff, seed=11))
        grid = state.grid
        assert len(grid) == side
        empties = sum(v == 0 for row in grid for v in row)
        assert empties == int(side * side * fraction)


def test_generated_prefill_is_internally_valid():
    state = engine.instantiate(make_template(PuzzleId.SUDOKILL, Difficulty.NORMAL, seed=12))
    grid = state.grid
    for r in range(9):
        for c in range(9):
            v = grid[r][c]
            if v == 0:
                continue
            stripped = with_cell(grid, r, c, 0)
            assert sudokill_is_valid(stripped, r, c, v)


def test_illegal_placement_hands_win_to_opponent():
    template = make_template(PuzzleId.SUDOKILL, Difficulty.EASY, seed=1)
    state = engine.instantiate(template)
    taken = next(
        (r, c) for r in range(4) for c in range(4) if state.grid[r][c] != 0
    )
    after, feedback = engine.step(state, Place(taken[0], taken[1], 1))
    assert feedback.terminated
    assert feedback.outcome.winner == 1
    assert after.phase is Phase.FINISHED


def test_random_match_terminates_with_legal_statuses():
    template = make_template(PuzzleId.SUDOKILL, Difficulty.EASY, seed=21)
    record = play_builtin(template, [RandomAgent(), RandomAgent()])
    assert record.statuses == (TerminationStatus.LEGAL, TerminationStatus.LEGAL)
    assert sorted(record.raw_scores) in ([0.0, 1.0], [0.5, 0.5])


def test_move_text_roundtrip():
    rules = rules_for(PuzzleId.SUDOKILL)
    move = Place(3, 7, 9)
    assert rules.parse_move(rules.move_to_text(move)) == move


@given(st.integers(min_value=1, max_value=400))
@settings(max_examples=40, deadline=None)
def test_legal_moves_always_target_allowed_empty_cells(seed):
    template = make_template(PuzzleId.SUDOKILL, Difficulty.EASY, seed=seed)
    state = engine.instantiate(template)
    rng = template.rng("probe")
    for _ in range(4):
        moves = engine.legal_moves(state)
        if not moves:
            break
        allowed = set(sudokill_allowed_cells(state.grid, state.last_move))
        for move in moves:
            assert (move.row, move.col) in allowed
            assert state.grid[move.row][move.col] == 0
            assert sudokill_is_valid(state.grid, move.row, move.col, move.value)
        state, feedback = engine.step(state, moves[rng.randrange(len(moves))])
        if feedback.terminated:
            break
