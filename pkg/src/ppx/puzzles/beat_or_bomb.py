"""Simultaneous card rounds: compete or give up, hidden until resolved.

Both players get equal-total hands dealt from a standard 52-card value
multiset (A=1 ... K=13).  Each round both secretly pick a card and a
choice.  Both compete: the higher card scores the sum (equal cards score
nothing).  One competes: the competitor scores their own card.  Neither:
no points.  Highest total after all cards wins.

The engine serialises the simultaneity: player 1 submits first each
round, the submission stays hidden, and the second submission resolves
the round.
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
    PuzzleId,
    PuzzleTemplate,
    ScoreDirection,
)

DECK = tuple(v for v in range(1, 14) for _ in range(4))


def duel_resolve_round(
    card_a: int, compete_a: bool, card_b: int, compete_b: bool
) -> tuple[int, int]:
    """Points for one resolved round."""
    if compete_a and compete_b:
        if card_a == card_b:
            return 0, 0
        pot = card_a + card_b
        return (pot, 0) if card_a > card_b else (0, pot)
    if compete_a:
        return card_a, 0
    if compete_b:
        return 0, card_b
    return 0, 0


def deal_hands(num_cards: int, rng) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two disjoint equal-total hands from the 52-card value multiset."""
    while True:
        deck = list(DECK)
        rng.shuffle(deck)
        hand_a = tuple(sorted(deck[:num_cards]))
        rest = deck[num_cards:]
        target = sum(hand_a)
        for _ in range(200):
            pick = rng.sample(rest, num_cards)
            if sum(pick) == target:
                return hand_a, tuple(sorted(pick))


RoundEntry = tuple[int, bool, int, bool, int, int]  # cards/choices/points by player


@dataclass(frozen=True)
class PlayRound:
    card: int
    compete: bool


@dataclass(frozen=True)
class DuelState(GameState):
    hands: tuple[tuple[int, ...], tuple[int, ...]]
    scores: tuple[int, int]
    pending: tuple[int, bool] | None  # player 1's hidden submission
    rounds: tuple[RoundEntry, ...]


@register
class BeatOrBombRules(PuzzleRules):
    puzzle_id = PuzzleId.BEAT_OR_BOMB
    players = 2
    stochastic = True
    score_direction = ScoreDirection.WIN_LOSS

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        return {"num_cards": 3 if difficulty is Difficulty.EASY else 5}

    def validate_template(self, template: PuzzleTemplate) -> None:
        super().validate_template(template)
        if not 1 <= template.size_params["num_cards"] <= 10:
            raise InvalidTemplate("num_cards must be in 1..10")

    def initial_state(self, template: PuzzleTemplate) -> DuelState:
        rng = template.rng("gen")
        hands = deal_hands(template.size_params["num_cards"], rng)
        return DuelState(
            template=template,
            turn_index=0,
            active_player=0,
            phase=Phase.RUNNING,
            outcome=None,
            hands=hands,
            scores=(0, 0),
            pending=None,
            rounds=(),
        )

    def legal_moves(self, state: DuelState) -> tuple[Any, ...]:
        if state.phase is Phase.FINISHED:
            return ()
        hand = state.hands[state.active_player]
        out = []
        for v in sorted(set(hand)):
            out.append(PlayRound(v, True))
            out.append(PlayRound(v, False))
        return tuple(out)

    def apply(self, state: DuelState, move: Any) -> tuple[DuelState, Feedback]:
        mover = state.active_player
        opponent = 1 - mover
        hand = state.hands[mover]
        bad = None
        if not isinstance(move, PlayRound):
            bad = "unrecognised move variant"
        elif move.card not in hand:
            bad = f"card {move.card} not in hand"
        if bad is not None:
            outcome = GameOutcome.win(opponent)
            done = replace(state, phase=Phase.FINISHED, outcome=outcome,
                           turn_index=state.turn_index + 1)
            return done, Feedback.illegal(bad, outcome=outcome)
        hands = list(state.hands)
        spent = list(hand)
        spent.remove(move.card)
        hands[mover] = tuple(spent)
        if state.pending is None:
            new = replace(
                state,
                hands=(hands[0], hands[1]),
                pending=(move.card, move.compete),
                active_player=opponent,
                turn_index=state.turn_index + 1,
            )
            return new, Feedback.legal()
        card_a, compete_a = state.pending
        pts_a, pts_b = duel_resolve_round(card_a, compete_a, move.card, move.compete)
        scores = (state.scores[0] + pts_a, state.scores[1] + pts_b)
        entry: RoundEntry = (card_a, compete_a, move.card, move.compete, pts_a, pts_b)
        finished = not hands[0] and not hands[1]
        outcome = None
        if finished:
            if scores[0] > scores[1]:
                outcome = GameOutcome.win(0)
            elif scores[1] > scores[0]:
                outcome = GameOutcome.win(1)
            else:
                outcome = GameOutcome.tie()
        new = replace(
            state,
            hands=(hands[0], hands[1]),
            scores=scores,
            pending=None,
            rounds=state.rounds + (entry,),
            active_player=0,
            turn_index=state.turn_index + 1,
            phase=Phase.FINISHED if finished else Phase.RUNNING,
            outcome=outcome,
        )
        fb = Feedback.legal(
            terminated=finished,
            outcome=outcome,
            revealed={
                "round": {
                    "p1": {"card": card_a, "compete": compete_a},
                    "p2": {"card": move.card, "compete": move.compete},
                    "points": [pts_a, pts_b],
                }
            },
        )
        return new, fb

    def observe(self, state: DuelState, viewer: int) -> str:
        own = state.hands[viewer]
        opp = state.hands[1 - viewer]
        lines = [
            f"BeatOrBomb you=P{viewer + 1} your_score={state.scores[viewer]} "
            f"opponent_score={state.scores[1 - viewer]}",
            f"your hand: {' '.join(str(v) for v in own) or '(empty)'}",
            f"opponent holds {len(opp)} cards (equal starting totals)",
            f"opponent submitted this round: "
            f"{'yes' if state.pending is not None and viewer == 1 else 'no'}",
        ]
        for i, (ca, xa, cb, xb, pa, pb) in enumerate(state.rounds):
            lines.append(
                f"round {i + 1}: P1 {ca} {'compete' if xa else 'giveup'}, "
                f"P2 {cb} {'compete' if xb else 'giveup'}, points {pa}/{pb}"
            )
        return "\n".join(lines)

    def payload(self, state: DuelState) -> dict[str, Any]:
        return {
            "hands": [list(h) for h in state.hands],
            "scores": list(state.scores),
            "pending": list(state.pending) if state.pending else None,
            "rounds": [list(r) for r in state.rounds],
        }

    def move_to_text(self, move: Any) -> str:
        word = "compete" if move.compete else "giveup"
        return f"{word} {move.card}"

    def parse_move(self, text: str) -> Any:
        m = re.fullmatch(r"(compete|giveup)\s+(\d+)", text.strip())
        if not m:
            raise MoveFormatError(f"bad card move: {text!r}")
        return PlayRound(int(m.group(2)), m.group(1) == "compete")
