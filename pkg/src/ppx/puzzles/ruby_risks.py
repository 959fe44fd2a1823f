"""Sequential box-opening gamble over a hidden split of rubies.

total_rubies are split uniformly at random across the boxes (any
composition is equally likely).  Boxes open strictly left to right, one
request per box: ask for an amount, receive exactly it if the box holds
at least that many, otherwise nothing; either way the box is finished
and its leftovers are forfeited.  Raw score is the total collected.
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
    PuzzleId,
    PuzzleTemplate,
    ScoreDirection,
)
from ..rng import DeterministicRng


def uniform_composition(total: int, parts: int, rng: DeterministicRng) -> tuple[int, ...]:
    """Uniform draw over all ways to split total into ordered parts."""
    if parts == 1:
        return (total,)
    cuts = sorted(rng.sample(range(total + parts - 1), parts - 1))
    bounds = [-1] + cuts + [total + parts - 1]
    return tuple(bounds[i + 1] - bounds[i] - 1 for i in range(parts))


def ruby_resolve(content: int, request: int) -> int:
    """Gain from one box: the request if it fits, otherwise zero."""
    return request if 0 <= request <= content else 0


def consistent_compositions(
    total: int, boxes: int, history: Iterable[tuple[int, int]]
) -> tuple[tuple[int, ...], ...]:
    """All hidden splits matching the (request, gain) history, in order.

    Exhaustive; intended for small worlds and for posterior tests.
    """
    history = tuple(history)

    def constraint_ok(i: int, content: int) -> bool:
        if i >= len(history):
            return True
        request, gain = history[i]
        # A zero request is always granted, so gain == request marks grants.
        if gain == request:
            return content >= request
        return content < request

    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, acc: tuple[int, ...]) -> None:
        if i == boxes - 1:
            if constraint_ok(i, left):
                out.append(acc + (left,))
            return
        for c in range(left + 1):
            if constraint_ok(i, c):
                rec(i + 1, left - c, acc + (c,))

    rec(0, total, ())
    return tuple(out)


@dataclass(frozen=True)
class Request:
    amount: int


@dataclass(frozen=True)
class RubyState(GameState):
    num_boxes: int
    total_rubies: int
    contents: tuple[int, ...]  # hidden
    box_index: int
    collected: int
    history: tuple[tuple[int, int], ...]  # (request, gain) per opened box


@register
class RubyRisksRules(PuzzleRules):
    puzzle_id = PuzzleId.RUBY_RISKS
    players = 1
    stochastic = True
    score_direction = ScoreDirection.HIGHER_BETTER

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        if difficulty is Difficulty.EASY:
            return {"num_boxes": 3, "total_rubies": 30}
        return {"num_boxes": 5, "total_rubies": 50}

    def validate_template(self, template: PuzzleTemplate) -> None:
        super().validate_template(template)
        if template.size_params["num_boxes"] < 1:
            raise InvalidTemplate("num_boxes must be positive")
        if template.size_params["total_rubies"] < 1:
            raise InvalidTemplate("total_rubies must be positive")

    def initial_state(self, template: PuzzleTemplate) -> RubyState:
        rng = template.rng("gen")
        n = template.size_params["num_boxes"]
        total = template.size_params["total_rubies"]
        return RubyState(
            template=template,
            turn_index=0,
            active_player=0,
            phase=Phase.RUNNING,
            outcome=None,
            num_boxes=n,
            total_rubies=total,
            contents=uniform_composition(total, n, rng),
            box_index=0,
            collected=0,
            history=(),
        )

    def legal_moves(self, state: RubyState) -> tuple[Any, ...]:
        if state.phase is Phase.FINISHED:
            return ()
        # Requests beyond total - collected can never be satisfied, so the
        # space stays finite and exactly enumerable.
        cap = state.total_rubies - state.collected
        return tuple(Request(a) for a in range(cap + 1))

    def apply(self, state: RubyState, move: Any) -> tuple[RubyState, Feedback]:
        cap = state.total_rubies - state.collected
        bad = None
        if not isinstance(move, Request):
            bad = "unrecognised move variant"
        elif move.amount < 0:
            bad = "request must be non-negative"
        elif move.amount > cap:
            bad = f"request exceeds the {cap} rubies that could remain"
        if bad is not None:
            outcome = GameOutcome.solo(state.collected)
            done = replace(state, phase=Phase.FINISHED, outcome=outcome,
                           turn_index=state.turn_index + 1)
            return done, Feedback.illegal(bad, outcome=outcome)
        gain = ruby_resolve(state.contents[state.box_index], move.amount)
        collected = state.collected + gain
        nxt = state.box_index + 1
        finished = nxt >= state.num_boxes
        outcome = GameOutcome.solo(collected) if finished else None
        new = replace(
            state,
            box_index=nxt,
            collected=collected,
            history=state.history + ((move.amount, gain),),
            turn_index=state.turn_index + 1,
            phase=Phase.FINISHED if finished else Phase.RUNNING,
            outcome=outcome,
        )
        return new, Feedback.legal(terminated=finished, outcome=outcome,
                                   revealed={"gain": gain})

    def observe(self, state: RubyState, viewer: int) -> str:
        lines = [
            f"RubyRisks boxes={state.num_boxes} total={state.total_rubies}",
            f"next box: {state.box_index + 1 if state.box_index < state.num_boxes else 'none'}",
            f"collected: {state.collected}",
        ]
        for i, (req, gain) in enumerate(state.history):
            lines.append(f"box {i + 1}: requested {req}, gained {gain}")
        return "\n".join(lines)

    def payload(self, state: RubyState) -> dict[str, Any]:
        return {
            "num_boxes": state.num_boxes,
            "total_rubies": state.total_rubies,
            "contents": list(state.contents),
            "box_index": state.box_index,
            "collected": state.collected,
            "history": [list(h) for h in state.history],
        }

    def abort_score(self, state: RubyState) -> float:
        return float(state.collected)

    def move_to_text(self, move: Any) -> str:
        return f"request {move.amount}"

    def parse_move(self, text: str) -> Any:
        m = re.fullmatch(r"request\s+(-?\d+)", text.strip())
        if not m:
            raise MoveFormatError(f"bad ruby move: {text!r}")
        return Request(int(m.group(1)))
