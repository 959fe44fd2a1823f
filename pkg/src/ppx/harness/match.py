"""The referee loop: observe, ask the seat, step, repeat."""

from __future__ import annotations

import time
from dataclasses import dataclass

from ..core.engine import instantiate, state_digest, step
from ..core.rules import rules_for
from ..core.types import (
    GameOutcome,
    Legality,
    MatchRecord,
    Phase,
    PpxError,
    PuzzleTemplate,
    TerminationStatus,
    TrajectoryStep,
)
from .seats import Seat, SeatFailure


class WrongSeatCount(PpxError):
    pass


@dataclass(frozen=True)
class MatchLimits:
    max_turns: int = 1000  # hard stop against runaway skip loops


def _scores_from_outcome(outcome: GameOutcome, players: int) -> tuple[float, ...]:
    if players == 1:
        return (float(outcome.solo_score),)
    if outcome.is_tie:
        return (0.5, 0.5)
    return (1.0, 0.0) if outcome.winner == 0 else (0.0, 1.0)


def run_match(
    template: PuzzleTemplate,
    seats: tuple[Seat, ...] | list[Seat],
    limits: MatchLimits = MatchLimits(),
) -> MatchRecord:
    rules = rules_for(template.puzzle_id)
    if len(seats) != rules.players:
        raise WrongSeatCount(
            f"{template.puzzle_id.value} needs {rules.players} seats, got {len(seats)}"
        )
    started = time.perf_counter()
    state = instantiate(template)
    statuses = [TerminationStatus.LEGAL] * rules.players
    trajectory: list[TrajectoryStep] = []
    failed_seat: int | None = None

    for i, seat in enumerate(seats):
        try:
            seat.start(template, i)
        except SeatFailure as failure:
            statuses[i] = failure.status
            failed_seat = i
            break

    if failed_seat is None:
        while state.phase is Phase.RUNNING and len(trajectory) < limits.max_turns:
            mover = state.active_player
            try:
                move = seats[mover].move(state, mover, rules)
            except SeatFailure as failure:
                statuses[mover] = failure.status
                failed_seat = mover
                break
            state, feedback = step(state, move)
            trajectory.append(TrajectoryStep(state_digest(state), move, feedback))
            if feedback.terminated and feedback.legality is Legality.ILLEGAL:
                # a terminating illegal move is the mover's fault; wrong
                # answer shape is an instruction problem, not a rule one
                if feedback.reason and feedback.reason.startswith("format:"):
                    statuses[mover] = TerminationStatus.NOT_FOLLOW_INSTRUCTION
                else:
                    statuses[mover] = TerminationStatus.RULE_VIOLATION

    if failed_seat is not None:
        if rules.players == 2:
            raw = [0.0, 0.0]
            raw[1 - failed_seat] = 1.0
            raw_scores = tuple(raw)
        else:
            raw_scores = (float(rules.abort_score(state)),)
    elif state.phase is Phase.FINISHED:
        assert state.outcome is not None
        raw_scores = _scores_from_outcome(state.outcome, rules.players)
    else:  # turn cap reached with the game still open
        if rules.players == 2:
            raw_scores = (0.5, 0.5)
        else:
            raw_scores = (float(rules.abort_score(state)),)

    record = MatchRecord(
        template=template,
        players=tuple(seat.label for seat in seats),
        trajectory=tuple(trajectory),
        statuses=tuple(statuses),
        raw_scores=raw_scores,
        wall_time=time.perf_counter() - started,
    )
    for seat in seats:
        try:
            seat.finish(record)
        except Exception:
            pass
        finally:
            seat.close()
    return record
