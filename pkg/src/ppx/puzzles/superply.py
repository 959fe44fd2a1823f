"""Hint-constrained connection game on a 1-indexed grid.

Each turn the mover gets a fresh arithmetic hint over (row, column) and
may claim any unoccupied cell satisfying it.  An invalid selection is
skipped and the turn passes.  Player 1 wins by connecting the left and
right edges with an 8-connected chain of their cells; player 2 connects
top to bottom.  A full board with no path is a tie.

Hints are drawn from a small predicate vocabulary over the cell's index
sum or product and are re-sampled until at least one unoccupied
satisfying cell exists.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, replace
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
from ..rng import DeterministicRng

Board = tuple[tuple[int, ...], ...]  # 0 empty, 1 player one, 2 player two

FEATURES = ("sum", "product")
RELATIONS = ("lt", "gt", "eq", "contains")
_RELATION_TEXT = {"lt": "<", "gt": ">", "eq": "="}

FALLBACK_HINT = ("sum", "gt", 1)  # satisfied by every cell on a 1-indexed grid
HINT_SAMPLE_CAP = 1000

Hint = tuple[str, str, int]


def hint_matches(hint: Hint, row: int, col: int) -> bool:
    feature, relation, param = hint
    value = row + col if feature == "sum" else row * col
    if relation == "lt":
        return value < param
    if relation == "gt":
        return value > param
    if relation == "eq":
        return value == param
    return str(param) in str(value)  # contains-digit


def hint_text(hint: Hint) -> str:
    feature, relation, param = hint
    if relation == "contains":
        return f"{feature} contains digit {param}"
    return f"{feature} {_RELATION_TEXT[relation]} {param}"


def superply_hint_cells(board: Board, hint: Hint) -> tuple[tuple[int, int], ...]:
    """Unoccupied 1-indexed cells satisfying the hint, row-major order."""
    side = len(board)
    return tuple(
        (r, c)
            for r in range(1, side + 1)
            for c in range(1, side + 1)
        if board[r - 1][c - 1] == 0 and hint_matches(hint, r, c)
    )


def draw_hint(board: Board, rng: DeterministicRng) -> Hint:
    side = len(board)
    for _ in range(HINT_SAMPLE_CAP):
        feature = rng.choice(FEATURES)
        relation = rng.choice(RELATIONS)
        if relation == "contains":
            param = rng.randint(1, 9)
        elif feature == "sum":
            param = rng.randint(2, 2 * side)
        else:
            param = rng.randint(1, side * side)
        hint = (feature, relation, param)
        if superply_hint_cells(board, hint):
            return hint
    return FALLBACK_HINT


_NEIGHBOURS = tuple(
    (dr, dc) for dr in (-1, 0, 1) for dc in (-1, 0, 1) if (dr, dc) != (0, 0)
)


def superply_has_path(board: Board, player: int) -> bool:
    """8-connected edge-to-edge chain: player 1 left-right, player 2 top-bottom."""
    side = len(board)
    mark = player + 1
    if player == 0:
        starts = [(r, 0) for r in range(side) if board[r][0] == mark]
        done = lambda r, c: c == side - 1
    else:
        starts = [(0, c) for c in range(side) if board[0][c] == mark]
        done = lambda r, c: r == side - 1
    seen = set(starts)
    queue = deque(starts)
    while queue:
        r, c = queue.popleft()
        if done(r, c):
            return True
        for dr, dc in _NEIGHBOURS:
            nr, nc = r + dr, c + dc
            if 0 <= nr < side and 0 <= nc < side and (nr, nc) not in seen \
                    and board[nr][nc] == mark:
                seen.add((nr, nc))
                queue.append((nr, nc))
    return False


@dataclass(frozen=True)
class Claim:
    row: int
    col: int


@dataclass(frozen=True)
class SuperplyState(GameState):
    board: Board
    hint: Hint


@register
class SuperplyRules(PuzzleRules):
    puzzle_id = PuzzleId.SUPERPLY
    players = 2
    stochastic = True
    score_direction = ScoreDirection.WIN_LOSS

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        return {"side": 4 if difficulty is Difficulty.EASY else 6}

    def validate_template(self, template: PuzzleTemplate) -> None:
        super().validate_template(template)
        if not 2 <= template.size_params["side"] <= 12:
            raise InvalidTemplate("side must be in 2..12")

    def initial_state(self, template: PuzzleTemplate) -> SuperplyState:
        side = template.size_params["side"]
        board = tuple(tuple(0 for _ in range(side)) for _ in range(side))
        return SuperplyState(
            template=template,
            turn_index=0,
            active_player=0,
            phase=Phase.RUNNING,
            outcome=None,
            board=board,
            hint=draw_hint(board, template.rng("hint/0")),
        )

    def legal_moves(self, state: SuperplyState) -> tuple[Any, ...]:
        if state.phase is Phase.FINISHED:
            return ()
        return tuple(Claim(r, c) for r, c in superply_hint_cells(state.board, state.hint))

    def apply(self, state: SuperplyState, move: Any) -> tuple[SuperplyState, Feedback]:
        mover = state.active_player
        side = len(state.board)
        valid = (
            isinstance(move, Claim)
            and (move.row, move.col) in superply_hint_cells(state.board, state.hint)
        )
        turn = state.turn_index + 1
        if not valid:
            # Invalid selection: the move is skipped and the turn passes.
            board = state.board
            new = replace(
                state,
                turn_index=turn,
                active_player=1 - mover,
                hint=draw_hint(board, state.template.rng(f"hint/{turn}")),
            )
            return new, Feedback.illegal(
                "selection does not satisfy the hint; turn passes", terminated=False
            )
        board = tuple(
            tuple(
                mover + 1 if (r + 1, c + 1) == (move.row, move.col) else state.board[r][c]
                for c in range(side)
            )
            for r in range(side)
        )
        if superply_has_path(board, mover):
            outcome = GameOutcome.win(mover)
            new = replace(state, board=board, turn_index=turn,
                          phase=Phase.FINISHED, outcome=outcome)
            return new, Feedback.legal(terminated=True, outcome=outcome)
        if all(v != 0 for row in board for v in row):
            outcome = GameOutcome.tie()
            new = replace(state, board=board, turn_index=turn,
                          phase=Phase.FINISHED, outcome=outcome)
            return new, Feedback.legal(terminated=True, outcome=outcome)
        new = replace(
            state,
            board=board,
            turn_index=turn,
            active_player=1 - mover,
            hint=draw_hint(board, state.template.rng(f"hint/{turn}")),
        )
        return new, Feedback.legal()

    def observe(self, state: SuperplyState, viewer: int) -> str:
        side = len(state.board)
        lines = [
            f"Superply side={side} to_move=P{state.active_player + 1} "
            f"(P1 joins left-right, P2 joins top-bottom)",
            f"hint: {hint_text(state.hint)}",
        ]
        for r in range(side):
            lines.append(
                "row " + " ".join(".12"[state.board[r][c]] for c in range(side))
            )
        return "\n".join(lines)

    def payload(self, state: SuperplyState) -> dict[str, Any]:
        return {
            "board": [list(row) for row in state.board],
            "hint": list(state.hint),
        }

    def move_to_text(self, move: Any) -> str:
        return f"claim {move.row} {move.col}"

    def parse_move(self, text: str) -> Any:
        m = re.fullmatch(r"claim\s+(\d+)\s+(\d+)", text.strip())
        if not m:
            raise MoveFormatError(f"bad claim move: {text!r}")
        return Claim(int(m.group(1)), int(m.group(2)))
