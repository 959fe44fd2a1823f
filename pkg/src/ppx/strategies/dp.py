"""Exact planners built on tabulated subgame values."""

from __future__ import annotations

from functools import lru_cache
from typing import Any

from ..puzzles.card_nim import NimState, PlayCard, cardnim_legal_cards
from ..puzzles.tidy_tower import NUM_COLORS, Rotate, RotateHold, TowerState
from .base import Agent

Hand = tuple[int, ...]


def _without(hand: Hand, value: int) -> Hand:
    i = hand.index(value)
    return hand[:i] + hand[i + 1 :]


@lru_cache(maxsize=None)
def cardnim_wins(stones: int, mine: Hand, theirs: Hand) -> bool:
    """True when the side to move can force the win."""
    for value in cardnim_legal_cards(stones, mine):
        if value == stones:
            return True
        if not cardnim_wins(stones - value, theirs, _without(mine, value)):
            return True
    return False  # no playable card, or every reply leaves a won position


class CardNimDpAgent(Agent):
    """Play the smallest card that keeps the position winning."""

    name = "dp"

    def decide(self, state: NimState, player: int) -> Any:
        mine = tuple(sorted(state.hands[player]))
        theirs = tuple(sorted(state.hands[1 - player]))
        legal = cardnim_legal_cards(state.stones, mine)
        if not legal:
            return PlayCard(min(state.hands[player], default=1))
        for value in legal:
            if value == state.stones:
                return PlayCard(value)
            if not cardnim_wins(state.stones - value, theirs, _without(mine, value)):
                return PlayCard(value)
        return PlayCard(legal[0])


class TidyTowerDpAgent(Agent):
    """Close the lowest untidy colour gap, one step per move.

    Every move below changes exactly one adjacent colour difference by
    one step in its cheaper direction, so the full playout uses exactly
    the budgeted minimum number of moves.
    """

    name = "dp"

    def decide(self, state: TowerState, player: int) -> Any:
        colors = state.colors
        for i in range(1, len(colors)):
            gap = (colors[i] - colors[i - 1]) % NUM_COLORS
            if gap == 0:
                continue
            if gap <= NUM_COLORS - gap:
                return RotateHold(i, i + 1)  # steps the gap down
            return Rotate(i + 1)  # steps the gap up toward the wraparound
        return Rotate(1)  # tower already tidy; only reachable off-protocol
