"""Nim with hands of single-use cards.

Both players hold the same card multiset; a card removes exactly its
value in stones and is then spent.  Taking the last stone wins; a player
with no playable card (every remaining card exceeds the stones) loses.
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


class CardNotHeld(PpxError):
    pass


def cardnim_legal_cards(stones: int, hand: tuple[int, ...]) -> tuple[int, ...]:
    """Distinct playable values, ascending."""
    return tuple(sorted({v for v in hand if v <= stones}))


@dataclass(frozen=True)
class PlayCard:
    value: int


@dataclass(frozen=True)
class NimState(GameState):
    stones: int
    hands: tuple[tuple[int, ...], tuple[int, ...]]


def _remove(hand: tuple[int, ...], value: int) -> tuple[int, ...]:
    if value not in hand:
        raise CardNotHeld(f"card {value} not in hand")
    out = list(hand)
    out.remove(value)
    return tuple(out)


@register
class CardNimRules(PuzzleRules):
    puzzle_id = PuzzleId.CARD_NIM
    players = 2
    stochastic = False
    score_direction = ScoreDirection.WIN_LOSS

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        return {"num_cards": 3 if difficulty is Difficulty.EASY else 5}

    def validate_template(self, template: PuzzleTemplate) -> None:
        super().validate_template(template)
        if not 1 <= template.size_params["num_cards"] <= 10:
            raise InvalidTemplate("num_cards must be in 1..10")

    def initial_state(self, template: PuzzleTemplate) -> NimState:
        rng = template.rng("gen")
        m = template.size_params["num_cards"]
        if template.difficulty is Difficulty.EASY:
            hand = tuple(range(1, m + 1))
        else:
            hand = tuple(sorted(rng.sample(range(1, 11), m)))
        stones = rng.randint(max(hand), sum(hand) + min(hand))
        return NimState(
            template=template,
            turn_index=0,
            active_player=0,
            phase=Phase.RUNNING,
            outcome=None,
            stones=stones,
            hands=(hand, hand),
        )

    def legal_moves(self, state: NimState) -> tuple[Any, ...]:
        if state.phase is Phase.FINISHED:
            return ()
        hand = state.hands[state.active_player]
        return tuple(PlayCard(v) for v in cardnim_legal_cards(state.stones, hand))

    def apply(self, state: NimState, move: Any) -> tuple[NimState, Feedback]:
        mover = state.active_player
        opponent = 1 - mover
        hand = state.hands[mover]
        bad = None
        if not isinstance(move, PlayCard):
            bad = "unrecognised move variant"
        elif move.value not in hand:
            bad = f"card {move.value} not held"
        elif move.value > state.stones:
            bad = f"card {move.value} exceeds the {state.stones} stones left"
        if bad is not None:
            outcome = GameOutcome.win(opponent)
            done = replace(state, phase=Phase.FINISHED, outcome=outcome,
                           turn_index=state.turn_index + 1)
            return done, Feedback.illegal(bad, outcome=outcome)
        hands = list(state.hands)
        hands[mover] = _remove(hand, move.value)
        new = replace(
            state,
            stones=state.stones - move.value,
            hands=(hands[0], hands[1]),
            active_player=opponent,
            turn_index=state.turn_index + 1,
        )
        if new.stones == 0:
            outcome = GameOutcome.win(mover)  # took the last stone
        elif not cardnim_legal_cards(new.stones, new.hands[opponent]):
            outcome = GameOutcome.win(mover)  # opponent cannot move
        else:
            outcome = None
        if outcome is not None:
            new = replace(new, phase=Phase.FINISHED, outcome=outcome)
            return new, Feedback.legal(terminated=True, outcome=outcome)
        return new, Feedback.legal()

    def observe(self, state: NimState, viewer: int) -> str:
        h0 = " ".join(str(v) for v in state.hands[0])
        h1 = " ".join(str(v) for v in state.hands[1])
        return (
            f"CardNim stones={state.stones} to_move=P{state.active_player + 1}\n"
            f"P1 hand: {h0 or '(empty)'}\n"
            f"P2 hand: {h1 or '(empty)'}"
        )

    def payload(self, state: NimState) -> dict[str, Any]:
        return {"stones": state.stones, "hands": [list(h) for h in state.hands]}

    def move_to_text(self, move: Any) -> str:
        return f"play {move.value}"

    def parse_move(self, text: str) -> Any:
        m = re.fullmatch(r"play\s+(\d+)", text.strip())
        if not m:
            raise MoveFormatError(f"bad nim move: {text!r}")
        return PlayCard(int(m.group(1)))
