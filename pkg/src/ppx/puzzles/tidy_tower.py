"""Tower of coloured cubes to align in as few rotations as the budget allows.

Colours cycle R -> Y -> B -> G -> R.  ``rotate(p)`` advances cube p and
every cube above it one colour step; ``rotate_hold(p, h)`` with h above p
advances cube p and every cube below it while the held cube and all
cubes above it stay put.  The tower is tidy when every cube shows the
same colour.  Raw score is 1.0 iff tidy within the budget, which the
generator sets to the instance's exact optimum.
"""

from __future__ import annotations

import re
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
    PpxError,
    PuzzleId,
    PuzzleTemplate,
    ScoreDirection,
)

COLORS = "RYBG"
NUM_COLORS = 4


class IndexOutOfRange(PpxError):
    pass


class HoldNotAbove(PpxError):
    pass


class BudgetExhausted(PpxError):
    pass


def tidy_rotate(colors: tuple[int, ...], position: int) -> tuple[int, ...]:
    """Advance cubes position..top one colour step. Positions are 1-based."""
    if not 1 <= position <= len(colors):
        raise IndexOutOfRange(f"position {position} outside 1..{len(colors)}")
    i = position - 1
    return colors[:i] + tuple((c + 1) % NUM_COLORS for c in colors[i:])


def tidy_rotate_hold(colors: tuple[int, ...], position: int, hold: int) -> tuple[int, ...]:
    """Advance cubes 1..position; the held cube and everything above stay."""
    if not 1 <= position <= len(colors):
        raise IndexOutOfRange(f"position {position} outside 1..{len(colors)}")
    if not 1 <= hold <= len(colors):
        raise IndexOutOfRange(f"hold {hold} outside 1..{len(colors)}")
    if hold <= position:
        raise HoldNotAbove("held cube must sit above the rotated cube")
    return tuple((c + 1) % NUM_COLORS for c in colors[:position]) + colors[position:]


def tidy_is_solved(colors: tuple[int, ...]) -> bool:
    return len(set(colors)) <= 1


def minimal_moves(colors: tuple[int, ...]) -> int:
    """Exact optimum.

    Each operation shifts exactly one adjacent colour difference by one
    step around the 4-cycle (rotate(p) moves the difference at p up,
    rotate_hold(p, h) moves the difference at p+1 down), so coordinates
    are independent and the optimum is the sum of cyclic distances.
    """
    total = 0
    for a, b in zip(colors, colors[1:]):
        d = (b - a) % NUM_COLORS
        total += min(d, NUM_COLORS - d)
    return total


@dataclass(frozen=True)
class Rotate:
    position: int


@dataclass(frozen=True)
class RotateHold:
    position: int
    hold: int


@dataclass(frozen=True)
class TowerState(GameState):
    colors: tuple[int, ...]
    budget: int
    moves_used: int


def colors_to_text(colors: tuple[int, ...]) -> str:
    return "".join(COLORS[c] for c in colors)


def colors_from_text(text: str) -> tuple[int, ...]:
    try:
        return tuple(COLORS.index(ch) for ch in text)
    except ValueError as exc:
        raise InvalidTemplate(f"bad colour string {text!r}") from exc


@register
class TidyTowerRules(PuzzleRules):
    puzzle_id = PuzzleId.TIDY_TOWER
    players = 1
    stochastic = False
    score_direction = ScoreDirection.HIGHER_BETTER

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        return {"num_cubes": 8 if difficulty is Difficulty.EASY else 14}

    def validate_template(self, template: PuzzleTemplate) -> None:
        super().validate_template(template)
        n = template.size_params["num_cubes"]
        if not 2 <= n <= 14:
            raise InvalidTemplate("num_cubes must be in 2..14")

    def initial_state(self, template: PuzzleTemplate) -> TowerState:
        rng = template.rng("gen")
        n = template.size_params["num_cubes"]
        while True:
            colors = tuple(rng.randrange(NUM_COLORS) for _ in range(n))
            if not tidy_is_solved(colors):
                break
        return TowerState(
            template=template,
            turn_index=0,
            active_player=0,
            phase=Phase.RUNNING,
            outcome=None,
            colors=colors,
            budget=minimal_moves(colors),
            moves_used=0,
        )

    def legal_moves(self, state: TowerState) -> tuple[Any, ...]:
        if state.phase is Phase.FINISHED:
            return ()
        n = len(state.colors)
        rotates = tuple(Rotate(p) for p in range(1, n + 1))
        holds = tuple(
            RotateHold(p, h) for p in range(1, n) for h in range(p + 1, n + 1)
        )
        return rotates + holds

    def apply(self, state: TowerState, move: Any) -> tuple[TowerState, Feedback]:
        if state.moves_used >= state.budget:
            raise BudgetExhausted("no moves left")  # unreachable while RUNNING
        try:
            if isinstance(move, Rotate):
                colors = tidy_rotate(state.colors, move.position)
            elif isinstance(move, RotateHold):
                colors = tidy_rotate_hold(state.colors, move.position, move.hold)
            else:
                raise IndexOutOfRange("unrecognised move variant")
        except (IndexOutOfRange, HoldNotAbove) as exc:
            outcome = GameOutcome.solo(0.0)
            done = replace(state, phase=Phase.FINISHED, outcome=outcome,
                           turn_index=state.turn_index + 1)
            return done, Feedback.illegal(str(exc), outcome=outcome)
        used = state.moves_used + 1
        solved = tidy_is_solved(colors)
        finished = solved or used >= state.budget
        outcome = GameOutcome.solo(1.0 if solved else 0.0) if finished else None
        new = replace(
            state,
            colors=colors,
            moves_used=used,
            turn_index=state.turn_index + 1,
            phase=Phase.FINISHED if finished else Phase.RUNNING,
            outcome=outcome,
        )
        return new, Feedback.legal(terminated=finished, outcome=outcome)

    def observe(self, state: TowerState, viewer: int) -> str:
        return (
            f"TidyTower cubes={len(state.colors)} cycle=R>Y>B>G\n"
            f"tower bottom-to-top: {colors_to_text(state.colors)}\n"
            f"moves used {state.moves_used} of budget {state.budget}"
        )

    def payload(self, state: TowerState) -> dict[str, Any]:
        return {
            "colors": list(state.colors),
            "budget": state.budget,
            "moves_used": state.moves_used,
        }

    def abort_score(self, state: TowerState) -> float:
        return 1.0 if tidy_is_solved(state.colors) else 0.0

    def move_to_text(self, move: Any) -> str:
        if isinstance(move, Rotate):
            return f"rotate {move.position}"
        return f"rotate {move.position} hold {move.hold}"

    def parse_move(self, text: str) -> Any:
        m = re.fullmatch(r"rotate\s+(\d+)(?:\s+hold\s+(\d+))?", text.strip())
        if not m:
            raise MoveFormatError(f"bad tower move: {text!r}")
        if m.group(2) is None:
            return Rotate(int(m.group(1)))
        return RotateHold(int(m.group(1)), int(m.group(2)))
