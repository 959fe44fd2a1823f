"""One-step lookahead baselines.

Each agent here uses only information its seat could legitimately see:
public state, its own hand, and the revealed history.
"""

from __future__ import annotations

from typing import Any, Iterable, Sequence

from ..core.types import GameState
from ..puzzles.beat_or_bomb import DuelState, PlayRound
from ..puzzles.particles import (
    ParticleState,
    PlaceParticle,
    cell_to_vector,
    legal_cells,
)
from ..puzzles.probes import Probe, ProbeState, valid_configurations
from ..puzzles.sudokill import (
    Place,
    SudokillState,
    sudokill_allowed_cells,
    sudokill_is_valid,
)
from ..puzzles.targets import PickBag, TargetState, expected_residual_values
from .base import Agent


def _sudokill_option_count(grid, last_move) -> int:
    side = len(grid)
    return sum(
        1
        for r, c in sudokill_allowed_cells(grid, last_move)
        for v in range(1, side + 1)
        if sudokill_is_valid(grid, r, c, v)
    )


class SudokillGreedyAgent(Agent):
    """Place the digit that leaves the opponent the fewest replies."""

    name = "greedy"

    def decide(self, state: SudokillState, player: int) -> Any:
        grid = state.grid
        side = len(grid)
        best_key = None
        best_move = None
        for r, c in sudokill_allowed_cells(grid, state.last_move):
            for v in range(1, side + 1):
                if not sudokill_is_valid(grid, r, c, v):
                    continue
                row = grid[r][:c] + (v,) + grid[r][c + 1 :]
                after = grid[:r] + (row,) + grid[r + 1 :]
                key = (_sudokill_option_count(after, (r, c)), r, c, v)
                if best_key is None or key < best_key:
                    best_key = key
                    best_move = Place(r, c, v)
        if best_move is None:
            # stuck seats still have to answer; the referee settles it
            empties = [(r, c) for r in range(side) for c in range(side) if grid[r][c] == 0]
            r, c = empties[0] if empties else (0, 0)
            return Place(r, c, 1)
        return best_move


def _completion_extra(dimension: int, placed: set[int], min_distance: int) -> int:
    """Placements added by always taking the lowest legal cell until stuck."""
    filled = set(placed)
    extra = 0
    while True:
        cells = legal_cells(dimension, filled, min_distance)
        if not cells:
            return extra
        filled.add(cells[0])
        extra += 1


class ParticlesGreedyAgent(Agent):
    """Steer the placement count toward a parity the mover wins.

    Each candidate cell is scored by deterministically completing the
    position (always the lowest legal cell): an even number of further
    placements means the opponent runs out first.  Ties fall to the move
    leaving the opponent the fewest replies, then the lowest cell.
    """

    name = "greedy"

    def decide(self, state: ParticleState, player: int) -> Any:
        cells = legal_cells(state.dimension, state.placed, state.min_distance)
        if not cells:
            return PlaceParticle(cell_to_vector(0, state.dimension))
        placed = set(state.placed)
        best_key = None
        pick = cells[0]
        for cell in cells:
            child = placed | {cell}
            rest = legal_cells(state.dimension, child, state.min_distance)
            if not rest:
                return PlaceParticle(cell_to_vector(cell, state.dimension))
            extra = _completion_extra(state.dimension, child, state.min_distance)
            key = (extra % 2, len(rest), cell)
            if best_key is None or key < best_key:
                best_key = key
                pick = cell
        return PlaceParticle(cell_to_vector(pick, state.dimension))


class ProbesGreedyAgent(Agent):
    """Binary-split probing over the consistent hidden configurations.

    Picks the unprobed cell whose worst-case answer leaves the fewest
    candidates.  A custom candidate family can be injected to model a
    restricted prior.
    """

    name = "greedy"

    def __init__(self, family: Iterable[Sequence[int]] | None = None) -> None:
        super().__init__()
        self._family = tuple(tuple(f) for f in family) if family is not None else None

    def decide(self, state: ProbeState, player: int) -> Any:
        d = state.dimension
        family = self._family
        if family is None:
            family = valid_configurations(d, state.min_distance, state.num_particles)
        candidates = [
            cfg
            for cfg in family
            if all((cell in cfg) == answer for cell, answer in state.probe_log)
        ]
        probed = {cell for cell, _ in state.probe_log}
        yes = {cell for cell, answer in state.probe_log if answer}
        if len(candidates) == 1:
            missing = sorted(set(candidates[0]) - yes)
            if missing:
                return Probe(cell_to_vector(missing[0], d))
        best_key = None
        pick = None
        for cell in range(2**d):
            if cell in probed:
                continue
            hits = sum(1 for cfg in candidates if cell in cfg)
            worst = max(hits, len(candidates) - hits)
            key = (worst, 0 if hits else 1, cell)
            if best_key is None or key < best_key:
                best_key = key
                pick = cell
        if pick is None:  # every cell probed already; cannot happen mid-game
            pick = 0
        return Probe(cell_to_vector(pick, d))


class BeatOrBombGreedyAgent(Agent):
    """Compete with the top card when it likely beats the opponent's
    average remaining card, otherwise bank the lowest card quietly."""

    name = "greedy"

    def decide(self, state: DuelState, player: int) -> Any:
        hand = state.hands[player]
        mine_played = sum(
            entry[0] if player == 0 else entry[2] for entry in state.rounds
        )
        theirs_played = sum(
            entry[2] if player == 0 else entry[0] for entry in state.rounds
        )
        # hands are dealt with equal totals, so the opponent's remaining
        # sum is fully determined by the public round history
        my_initial = sum(hand) + mine_played
        their_remaining_total = my_initial - theirs_played
        their_remaining_count = len(hand)  # both sides play once per round
        estimate = their_remaining_total / max(their_remaining_count, 1)
        if max(hand) > estimate:
            return PlayRound(max(hand), True)
        return PlayRound(min(hand), False)


class TargetsGreedyAgent(Agent):
    """Pick the bag with the highest posterior expected draw value."""

    name = "greedy"

    def decide(self, state: TargetState, player: int) -> Any:
        values = expected_residual_values(state.bags, state.draw_log)
        best_key = None
        pick = 0
        for idx, value in enumerate(values):
            if value is None:
                continue
            key = (-value, idx)
            if best_key is None or key < best_key:
                best_key = key
                pick = idx
        return PickBag(pick)
