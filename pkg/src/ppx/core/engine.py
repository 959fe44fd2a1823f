"""Engine entry points: instantiate, step, observe, evaluate, digest."""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .rules import rules_for
from .types import (
    Feedback,
    GameState,
    MatchRecord,
    Phase,
    PuzzleTemplate,
    SteppedFinishedGame,
    UnterminatedTrajectory,
)


def instantiate(template: PuzzleTemplate) -> GameState:
    """Deterministically expand a template into the initial state."""
    rules = rules_for(template.puzzle_id)
    rules.validate_template(template)
    return rules.initial_state(template)


def step(state: GameState, move: Any) -> tuple[GameState, Feedback]:
    if state.phase is Phase.FINISHED:
        raise SteppedFinishedGame("cannot step a finished game")
    rules = rules_for(state.template.puzzle_id)
    return rules.apply(state, move)


def legal_moves(state: GameState) -> tuple[Any, ...]:
    return rules_for(state.template.puzzle_id).legal_moves(state)


def observe(state: GameState, viewer: int = 0) -> str:
    return rules_for(state.template.puzzle_id).observe(state, viewer)


def state_digest(state: GameState) -> str:
    """Short stable hash of the complete state, hidden fields included."""
    rules = rules_for(state.template.puzzle_id)
    doc = {
        "template": state.template.to_json(),
        "turn": state.turn_index,
        "active": state.active_player,
        "phase": state.phase.value,
        "payload": rules.payload(state),
    }
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]


def evaluate(record: MatchRecord) -> tuple[float, ...]:
    """Raw scores from a terminated trajectory.

    Two-player outcomes map to {0, 0.5, 1}; solo outcomes carry the
    puzzle's raw value through unchanged.
    """
    if not record.trajectory or not record.trajectory[-1].feedback.terminated:
        raise UnterminatedTrajectory("record does not reach a terminal state")
    outcome = record.trajectory[-1].feedback.outcome
    if outcome is None:
        raise UnterminatedTrajectory("terminal feedback carries no outcome")
    rules = rules_for(record.template.puzzle_id)
    if rules.players == 1:
        return (float(outcome.solo_score),)
    if outcome.is_tie:
        return (0.5, 0.5)
    return (1.0, 0.0) if outcome.winner == 0 else (0.0, 1.0)
