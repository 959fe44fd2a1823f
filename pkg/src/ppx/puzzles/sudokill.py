"""Adversarial Sudoku: fill cells alternately, first invalid or stuck player loses.

After a move at (r, c), the opponent must play in an empty cell sharing
row r or column c; when no such cell exists the constraint falls back to
any empty cell.  A placement repeating a value in its row, column, or
subgrid loses immediately, as does having no cell to play at all.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Any

from ..core.rules import PuzzleRules, register
from ..core.types import (
    Difficulty,
    Feedback,
    GameOutcome,
    GameState,
    InvalidTemplate,
    MoveFormatError,
    Phase,
    PuzzleId,
    PuzzleTemplate,
    ScoreDirection,
)

Grid = tuple[tuple[int, ...], ...]

REMOVAL_FRACTION = {Difficulty.EASY: 0.5, Difficulty.NORMAL: 0.6}


@lru_cache(maxsize=4096)
def _masks(grid: Grid) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Bitmasks of used values per row, column, and subgrid."""
    side = len(grid)
    box = math.isqrt(side)
    rows = [0] * side
    cols = [0] * side
    boxes = [0] * side
    for r in range(side):
        for c in range(side):
            v = grid[r][c]
            if v:
                bit = 1 << v
                rows[r] |= bit
                cols[c] |= bit
                boxes[(r // box) * box + c // box] |= bit
    return tuple(rows), tuple(cols), tuple(boxes)


def sudokill_is_valid(grid: Grid, row: int, col: int, value: int) -> bool:
    """True iff placing value at an empty (row, col) breaks no constraint."""
    side = len(grid)
    if not (0 <= row < side and 0 <= col < side and 1 <= value <= side):
        return False
    if grid[row][col] != 0:
        return False
    box = math.isqrt(side)
    rows, cols, boxes = _masks(grid)
    bit = 1 << value
    return not (
        rows[row] & bit
        or cols[col] & bit
        or boxes[(row // box) * box + col // box] & bit
    )


def sudokill_allowed_cells(grid: Grid, last_move: tuple[int, int] | None) -> tuple[tuple[int, int], ...]:
    """Cells the mover may use: empties sharing the last move's row or
    column, falling back to all empties when that set is empty."""
    side = len(grid)
    empties = tuple(
        (r, c) for r in range(side) for c in range(side) if grid[r][c] == 0
    )
    if last_move is None:
        return empties
    lr, lc = last_move
    shared = tuple((r, c) for r, c in empties if r == lr or c == lc)
    return shared if shared else empties


def _solved_grid(side: int, rng) -> Grid:
    """Random solved grid: canonical pattern plus symbol/band/stack shuffles."""
    box = math.isqrt(side)
    pattern = [
        [(r % box) * box + r // box + c for c in range(side)] for r in range(side)
    ]
    grid = [[pattern[r][c] % side + 1 for c in range(side)] for r in range(side)]

    symbols = list(range(1, side + 1))
    rng.shuffle(symbols)

    def shuffled_groups() -> list[int]:
        bands = list(range(box))
        rng.shuffle(bands)
        order = []
        for b in bands:
            inner = list(range(box))
            rng.shuffle(inner)
            order.extend(b * box + i for i in inner)
        return order

    row_order = shuffled_groups()
    col_order = shuffled_groups()
    return tuple(
        tuple(symbols[grid[row_order[r]][col_order[c]] - 1] for c in range(side))
        for r in range(side)
    )


@dataclass(frozen=True)
class Place:
    row: int
    col: int
    value: int


@dataclass(frozen=True)
class SudokillState(GameState):
    grid: Grid
    last_move: tuple[int, int] | None


@register
class SudokillRules(PuzzleRules):
    puzzle_id = PuzzleId.SUDOKILL
    players = 2
    stochastic = False
    score_direction = ScoreDirection.WIN_LOSS

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        return {"side": 4 if difficulty is Difficulty.EASY else 9}

    def validate_template(self, template: PuzzleTemplate) -> None:
        super().validate_template(template)
        side = template.size_params["side"]
        if math.isqrt(side) ** 2 != side or side < 4:
            raise InvalidTemplate("side must be a perfect square >= 4")

    def initial_state(self, template: PuzzleTemplate) -> SudokillState:
        rng = template.rng("gen")
        side = template.size_params["side"]
        solved = _solved_grid(side, rng)
        cells = [(r, c) for r in range(side) for c in range(side)]
        removed = rng.sample(cells, int(side * side * REMOVAL_FRACTION[template.difficulty]))
        removed_set = set(removed)
        grid = tuple(
            tuple(0 if (r, c) in removed_set else solved[r][c] for c in range(side))
            for r in range(side)
        )
        return SudokillState(
            template=template,
            turn_index=0,
            active_player=0,
            phase=Phase.RUNNING,
            outcome=None,
            grid=grid,
            last_move=None,
        )

    def legal_moves(self, state: SudokillState) -> tuple[Any, ...]:
        if state.phase is Phase.FINISHED:
            return ()
        side = len(state.grid)
        out = []
        for r, c in sudokill_allowed_cells(state.grid, state.last_move):
            for v in range(1, side + 1):
                if sudokill_is_valid(state.grid, r, c, v):
                    out.append(Place(r, c, v))
        return tuple(out)

    def apply(self, state: SudokillState, move: Any) -> tuple[SudokillState, Feedback]:
        mover = state.active_player
        opponent = 1 - mover
        bad = None
        if not isinstance(move, Place):
            bad = "unrecognised move variant"
        elif (move.row, move.col) not in sudokill_allowed_cells(state.grid, state.last_move):
            bad = "cell not in the allowed set"
        elif not sudokill_is_valid(state.grid, move.row, move.col, move.value):
            bad = "placement violates a row, column, or subgrid constraint"
        if bad is not None:
            outcome = GameOutcome.win(opponent)
            done = replace(state, phase=Phase.FINISHED, outcome=outcome,
                           turn_index=state.turn_index + 1)
            return done, Feedback.illegal(bad, outcome=outcome)
        grid = tuple(
            tuple(move.value if (r, c) == (move.row, move.col) else state.grid[r][c]
                  for c in range(len(state.grid)))
            for r in range(len(state.grid))
        )
        new = replace(
            state,
            grid=grid,
            last_move=(move.row, move.col),
            active_player=opponent,
            turn_index=state.turn_index + 1,
        )
        if not self.legal_moves(new):
            outcome = GameOutcome.win(mover)
            new = replace(new, phase=Phase.FINISHED, outcome=outcome)
            return new, Feedback.legal(terminated=True, outcome=outcome)
        return new, Feedback.legal()

    def observe(self, state: SudokillState, viewer: int) -> str:
        side = len(state.grid)
        lines = [f"SudoKill side={side} to_move=P{state.active_player + 1}"]
        last = "none" if state.last_move is None else f"{state.last_move[0]} {state.last_move[1]}"
        lines.append(f"last_move: {last}")
        for r in range(side):
            lines.append("row " + " ".join(str(v) for v in state.grid[r]))
        return "\n".join(lines)

    def payload(self, state: SudokillState) -> dict[str, Any]:
        return {
            "grid": [list(row) for row in state.grid],
            "last_move": list(state.last_move) if state.last_move else None,
        }

    def move_to_text(self, move: Any) -> str:
        return f"place {move.row} {move.col} {move.value}"

    def parse_move(self, text: str) -> Any:
        m = re.fullmatch(r"place\s+(\d+)\s+(\d+)\s+(\d+)", text.strip())
        if not m:
            raise MoveFormatError(f"bad sudokill move: {text!r}")
        return Place(int(m.group(1)), int(m.group(2)), int(m.group(3)))
