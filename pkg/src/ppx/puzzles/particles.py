"""Alternating placement of particles in a binary hypercube.

Every new particle must sit at Hamming distance at least k from all
particles already placed.  The player left without a valid cell loses.
Cells are binary vectors of length d, canonically ordered by their
integer encoding (first coordinate most significant).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Any, Iterable

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


class DimensionMismatch(PpxError):
    pass


def hamming(a: int, b: int) -> int:
    return bin(a ^ b).count("1")


def vector_to_cell(bits: Iterable[int]) -> int:
    cell = 0
    for b in bits:
        cell = (cell << 1) | (b & 1)
    return cell


def cell_to_vector(cell: int, dimension: int) -> tuple[int, ...]:
    return tuple((cell >> (dimension - 1 - i)) & 1 for i in range(dimension))


def particles_placement_legal(
    cell: int, placed: Iterable[int], min_distance: int
) -> bool:
    """True iff cell is unoccupied and >= min_distance from every particle."""
    return all(p != cell and hamming(cell, p) >= min_distance for p in placed)


def legal_cells(dimension: int, placed: Iterable[int], min_distance: int) -> tuple[int, ...]:
    placed = tuple(placed)
    return tuple(
        c for c in range(1 << dimension)
        if particles_placement_legal(c, placed, min_distance)
    )


@dataclass(frozen=True)
class PlaceParticle:
    bits: tuple[int, ...]


@dataclass(frozen=True)
class ParticleState(GameState):
    dimension: int
    min_distance: int
    placed: tuple[int, ...]


@register
class ExclusivityParticlesRules(PuzzleRules):
    puzzle_id = PuzzleId.EXCLUSIVITY_PARTICLES
    players = 2
    stochastic = False
    score_direction = ScoreDirection.WIN_LOSS

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        if difficulty is Difficulty.EASY:
            return {"dimension": 3, "min_distance": 2}
        return {"dimension": 5, "min_distance": 2}

    def validate_template(self, template: PuzzleTemplate) -> None:
        super().validate_template(template)
        d = template.size_params["dimension"]
        k = template.size_params["min_distance"]
        if not 1 <= d <= 12:
            raise InvalidTemplate("dimension must be in 1..12")
        if not 1 <= k <= d:
            raise InvalidTemplate("min_distance must be in 1..dimension")

    def initial_state(self, template: PuzzleTemplate) -> ParticleState:
        return ParticleState(
            template=template,
            turn_index=0,
            active_player=0,
            phase=Phase.RUNNING,
            outcome=None,
            dimension=template.size_params["dimension"],
            min_distance=template.size_params["min_distance"],
            placed=(),
        )

    def legal_moves(self, state: ParticleState) -> tuple[Any, ...]:
        if state.phase is Phase.FINISHED:
            return ()
        return tuple(
            PlaceParticle(cell_to_vector(c, state.dimension))
            for c in legal_cells(state.dimension, state.placed, state.min_distance)
        )

    def apply(self, state: ParticleState, move: Any) -> tuple[ParticleState, Feedback]:
        mover = state.active_player
        opponent = 1 - mover
        bad = None
        cell = None
        if not isinstance(move, PlaceParticle):
            bad = "unrecognised move variant"
        elif len(move.bits) != state.dimension or any(b not in (0, 1) for b in move.bits):
            bad = f"position must be {state.dimension} binary coordinates"
        else:
            cell = vector_to_cell(move.bits)
            if not particles_placement_legal(cell, state.placed, state.min_distance):
                bad = "cell occupied or closer than the required distance"
        if bad is not None:
            outcome = GameOutcome.win(opponent)
            done = replace(state, phase=Phase.FINISHED, outcome=outcome,
                           turn_index=state.turn_index + 1)
            return done, Feedback.illegal(bad, outcome=outcome)
        new = replace(
            state,
            placed=state.placed + (cell,),
            active_player=opponent,
            turn_index=state.turn_index + 1,
        )
        if not legal_cells(new.dimension, new.placed, new.min_distance):
            outcome = GameOutcome.win(mover)
            new = replace(new, phase=Phase.FINISHED, outcome=outcome)
            return new, Feedback.legal(terminated=True, outcome=outcome)
        return new, Feedback.legal()

    def observe(self, state: ParticleState, viewer: int) -> str:
        placed = " ".join(
            "".join(str(b) for b in cell_to_vector(c, state.dimension))
            for c in state.placed
        ) or "(none)"
        return (
            f"ExclusivityParticles dimension={state.dimension} "
            f"min_distance={state.min_distance} to_move=P{state.active_player + 1}\n"
            f"placed: {placed}"
        )

    def payload(self, state: ParticleState) -> dict[str, Any]:
        return {
            "dimension": state.dimension,
            "min_distance": state.min_distance,
            "placed": list(state.placed),
        }

    def move_to_text(self, move: Any) -> str:
        return "place " + " ".join(str(b) for b in move.bits)

    def parse_move(self, text: str) -> Any:
        m = re.fullmatch(r"place((?:\s+[01])+)", text.strip())
        if not m:
            raise MoveFormatError(f"bad particle move: {text!r}")
        return PlaceParticle(tuple(int(b) for b in m.group(1).split()))
