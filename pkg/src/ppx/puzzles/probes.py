"""Locate hidden particles in a hypercube with yes/no probes.

The hidden configuration is drawn uniformly from every placement of
num_particles distinct cells whose pairwise Hamming distances are at
least min_distance.  A probe answers whether its cell holds a particle;
repeated probes are counted again.  The game ends once every particle
cell has received a yes answer, and the raw score is the number of
probes used (lower is better).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Any

from ..core.rules import PuzzleRules, register
from ..core.types import (
    Difficulty,
    Feedback,
    GameOutcome,
    GameState,
    GameUnfinished,
    InvalidTemplate,
    MoveFormatError,
    Phase,
    PuzzleId,
    PuzzleTemplate,
    ScoreDirection,
)
from .particles import cell_to_vector, hamming, vector_to_cell


def valid_configurations(
    dimension: int, min_distance: int, num_particles: int
) -> tuple[frozenset[int], ...]:
    """Every admissible hidden placement, in a canonical order."""
    cells = range(1 << dimension)
    out = []
    for combo in combinations(cells, num_particles):
        if all(hamming(a, b) >= min_distance for a, b in combinations(combo, 2)):
            out.append(frozenset(combo))
    return tuple(out)


def probes_answer(hidden: frozenset[int], cell: int) -> bool:
    return cell in hidden


def probes_score(state: "ProbeState") -> int:
    """Probes used; defined only once every particle is confirmed."""
    if state.phase is not Phase.FINISHED or state.outcome is None:
        raise GameUnfinished("particles not all confirmed yet")
    return len(state.probe_log)


@dataclass(frozen=True)
class Probe:
    bits: tuple[int, ...]


@dataclass(frozen=True)
class ProbeState(GameState):
    dimension: int
    min_distance: int
    num_particles: int
    hidden: frozenset[int]
    probe_log: tuple[tuple[int, bool], ...]


@register
class ExclusivityProbesRules(PuzzleRules):
    puzzle_id = PuzzleId.EXCLUSIVITY_PROBES
    players = 1
    stochastic = True
    score_direction = ScoreDirection.LOWER_BETTER

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        if difficulty is Difficulty.EASY:
            return {"dimension": 3, "min_distance": 1, "num_particles": 2}
        return {"dimension": 4, "min_distance": 2, "num_particles": 3}

    def validate_template(self, template: PuzzleTemplate) -> None:
        super().validate_template(template)
        d = template.size_params["dimension"]
        k = template.size_params["min_distance"]
        m = template.size_params["num_particles"]
        if not 1 <= d <= 6:
            raise InvalidTemplate("dimension must be in 1..6")
        if not 1 <= k <= d:
            raise InvalidTemplate("min_distance must be in 1..dimension")
        if not 1 <= m <= 1 << d:
            raise InvalidTemplate("num_particles out of range")
        if not valid_configurations(d, k, m):
            raise InvalidTemplate("no valid configuration exists")

    def initial_state(self, template: PuzzleTemplate) -> ProbeState:
        rng = template.rng("gen")
        d = template.size_params["dimension"]
        k = template.size_params["min_distance"]
        m = template.size_params["num_particles"]
        hidden = rng.choice(valid_configurations(d, k, m))
        return ProbeState(
            template=template,
            turn_index=0,
            active_player=0,
            phase=Phase.RUNNING,
            outcome=None,
            dimension=d,
            min_distance=k,
            num_particles=m,
            hidden=hidden,
            probe_log=(),
        )

    def legal_moves(self, state: ProbeState) -> tuple[Any, ...]:
        if state.phase is Phase.FINISHED:
            return ()
        return tuple(
            Probe(cell_to_vector(c, state.dimension))
            for c in range(1 << state.dimension)
        )

    def apply(self, state: ProbeState, move: Any) -> tuple[ProbeState, Feedback]:
        bad = None
        if not isinstance(move, Probe):
            bad = "unrecognised move variant"
        elif len(move.bits) != state.dimension or any(b not in (0, 1) for b in move.bits):
            bad = f"probe must have {state.dimension} binary coordinates"
        if bad is not None:
            outcome = GameOutcome.solo(self.abort_score(state))
            done = replace(state, phase=Phase.FINISHED, outcome=outcome,
                           turn_index=state.turn_index + 1)
            return done, Feedback.illegal(bad, outcome=outcome)
        cell = vector_to_cell(move.bits)
        answer = probes_answer(state.hidden, cell)
        log = state.probe_log + ((cell, answer),)
        confirmed = {c for c, yes in log if yes}
        finished = state.hidden <= confirmed
        outcome = GameOutcome.solo(len(log)) if finished else None
        new = replace(
            state,
            probe_log=log,
            turn_index=state.turn_index + 1,
            phase=Phase.FINISHED if finished else Phase.RUNNING,
            outcome=outcome,
        )
        fb = Feedback.legal(
            terminated=finished,
            outcome=outcome,
            revealed={"answer": "yes" if answer else "no"},
        )
        return new, fb

    def observe(self, state: ProbeState, viewer: int) -> str:
        lines = [
            f"ExclusivityProbes dimension={state.dimension} "
            f"min_distance={state.min_distance} particles={state.num_particles}",
            f"probes used: {len(state.probe_log)}",
        ]
        for cell, yes in state.probe_log:
            bits = "".join(str(b) for b in cell_to_vector(cell, state.dimension))
            lines.append(f"probe {bits}: {'yes' if yes else 'no'}")
        return "\n".join(lines)

    def payload(self, state: ProbeState) -> dict[str, Any]:
        return {
            "dimension": state.dimension,
            "min_distance": state.min_distance,
            "num_particles": state.num_particles,
            "hidden": sorted(state.hidden),
            "probe_log": [[c, yes] for c, yes in state.probe_log],
        }

    def abort_score(self, state: ProbeState) -> float:
        # Lower is better and normalization needs positive raws, so an
        # abnormal end scores strictly worse than any honest sweep.
        return float(max(2 * (1 << state.dimension), 2 * len(state.probe_log), 1))

    def move_to_text(self, move: Any) -> str:
        return "probe " + " ".join(str(b) for b in move.bits)

    def parse_move(self, text: str) -> Any:
        m = re.fullmatch(r"probe((?:\s+[01])+)", text.strip())
        if not m:
            raise MoveFormatError(f"bad probe move: {text!r}")
        return Probe(tuple(int(b) for b in m.group(1).split()))
