"""Coin-bag drawing with known contents but a hidden bag order.

The bag multisets are public; which visible position holds which bag is
a uniformly random hidden permutation.  Picking a visible bag draws a
uniform coin from that bag's remaining contents.  MaxTarget is solo:
maximise the total of max_guess draws.  LargerTarget alternates two
players with max_guess draws each; the higher total wins.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from itertools import permutations
from typing import Any, ClassVar, Iterable

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


class EmptyBag(PpxError):
    pass


Bags = tuple[tuple[int, ...], ...]
DrawLog = tuple[tuple[int, int, int], ...]  # (player, visible_index, coin)


def bag_posterior(bags: Bags, draw_log: DrawLog) -> tuple[tuple[int, ...], ...]:
    """Permutations (visible index -> bag id) consistent with the draws."""
    n = len(bags)
    drawn: list[list[int]] = [[] for _ in range(n)]
    for _, idx, coin in draw_log:
        drawn[idx].append(coin)

    def fits(perm: tuple[int, ...]) -> bool:
        for idx, bag_id in enumerate(perm):
            pool = list(bags[bag_id])
            for coin in drawn[idx]:
                if coin not in pool:
                    return False
                pool.remove(coin)
        return True

    return tuple(p for p in permutations(range(n)) if fits(p))


def expected_residual_values(bags: Bags, draw_log: DrawLog) -> tuple[float | None, ...]:
    """Posterior expected value of one draw from each visible index.

    None marks indexes whose mapped bag is empty under every consistent
    permutation.
    """
    n = len(bags)
    drawn: list[list[int]] = [[] for _ in range(n)]
    for _, idx, coin in draw_log:
        drawn[idx].append(coin)
    out: list[float | None] = []
    for idx in range(n):
        means = []
        for perm in bag_posterior(bags, draw_log):
            pool = list(bags[perm[idx]])
            for coin in drawn[idx]:
                pool.remove(coin)
            if pool:
                means.append(sum(pool) / len(pool))
        out.append(sum(means) / len(means) if means else None)
    return tuple(out)


@dataclass(frozen=True)
class PickBag:
    index: int


@dataclass(frozen=True)
class TargetState(GameState):
    bags: Bags  # public multisets, canonical order
    perm: tuple[int, ...]  # hidden: visible index -> bag id
    residuals: Bags  # by bag id
    picks_left: tuple[int, ...]  # per player
    totals: tuple[int, ...]
    draw_log: DrawLog


def _residual_nonempty(state: TargetState, visible_index: int) -> bool:
    return bool(state.residuals[state.perm[visible_index]])


class _TargetRulesBase(PuzzleRules):
    stochastic = True

    def _gen_bags(self, template: PuzzleTemplate) -> tuple[Bags, tuple[int, ...]]:
        rng = template.rng("gen")
        b = template.size_params["bag_count"]
        c = template.size_params["coins_per_bag"]
        while True:
            bags = tuple(
                tuple(sorted(rng.randint(1, 9) for _ in range(c))) for _ in range(b)
            )
            if len(set(bags)) == b:  # distinct multisets keep inference meaningful
                break
        bags = tuple(sorted(bags))
        perm = list(range(b))
        rng.shuffle(perm)
        return bags, tuple(perm)

    def _initial(self, template: PuzzleTemplate, players: int) -> TargetState:
        bags, perm = self._gen_bags(template)
        g = template.size_params["max_guess"]
        return TargetState(
            template=template,
            turn_index=0,
            active_player=0,
            phase=Phase.RUNNING,
            outcome=None,
            bags=bags,
            perm=perm,
            residuals=bags,
            picks_left=tuple(g for _ in range(players)),
            totals=tuple(0 for _ in range(players)),
            draw_log=(),
        )

    def validate_template(self, template: PuzzleTemplate) -> None:
        super().validate_template(template)
        b = template.size_params["bag_count"]
        c = template.size_params["coins_per_bag"]
        g = template.size_params["max_guess"]
        if b < 2 or c < 1 or g < 1:
            raise InvalidTemplate("bag_count >= 2, coins_per_bag >= 1, max_guess >= 1")
        if g * self.players > b * c:
            raise InvalidTemplate("not enough coins for all picks")

    def legal_moves(self, state: TargetState) -> tuple[Any, ...]:
        if state.phase is Phase.FINISHED:
            return ()
        return tuple(
            PickBag(i) for i in range(len(state.bags)) if _residual_nonempty(state, i)
        )

    def apply(self, state: TargetState, move: Any) -> tuple[TargetState, Feedback]:
        mover = state.active_player
        bad = None
        if not isinstance(move, PickBag):
            bad = "unrecognised move variant"
        elif not 0 <= move.index < len(state.bags):
            bad = f"no bag at index {move.index}"
        elif not _residual_nonempty(state, move.index):
            bad = f"bag at index {move.index} is empty"
        if bad is not None:
            return self._abort(state, bad)
        bag_id = state.perm[move.index]
        pool = state.residuals[bag_id]
        draw_rng = state.template.rng(f"draw/{state.turn_index}")
        coin = pool[draw_rng.randrange(len(pool))]
        rest = list(pool)
        rest.remove(coin)
        residuals = tuple(
            tuple(rest) if i == bag_id else state.residuals[i]
            for i in range(len(state.residuals))
        )
        picks = list(state.picks_left)
        picks[mover] -= 1
        totals = list(state.totals)
        totals[mover] += coin
        new = replace(
            state,
            residuals=residuals,
            picks_left=tuple(picks),
            totals=tuple(totals),
            draw_log=state.draw_log + ((mover, move.index, coin),),
            turn_index=state.turn_index + 1,
            active_player=self._next_player(state),
        )
        new, outcome = self._maybe_finish(new)
        fb = Feedback.legal(
            terminated=new.phase is Phase.FINISHED,
            outcome=outcome,
            revealed={"coin": coin},
        )
        return new, fb

    def _next_player(self, state: TargetState) -> int:
        return state.active_player

    def _abort(self, state: TargetState, reason: str) -> tuple[TargetState, Feedback]:
        raise NotImplementedError

    def _maybe_finish(self, state: TargetState) -> tuple[TargetState, GameOutcome | None]:
        raise NotImplementedError

    def observe(self, state: TargetState, viewer: int) -> str:
        bags = " ".join("[" + " ".join(str(v) for v in bag) + "]" for bag in state.bags)
        lines = [
            f"{self.puzzle_id.value} bags={len(state.bags)} "
            f"picks_left={' '.join(str(p) for p in state.picks_left)}",
            f"bag contents (order hidden): {bags}",
            f"totals: {' '.join(str(t) for t in state.totals)}",
        ]
        for player, idx, coin in state.draw_log:
            lines.append(f"P{player + 1} drew {coin} from index {idx}")
        return "\n".join(lines)

    def payload(self, state: TargetState) -> dict[str, Any]:
        return {
            "bags": [list(b) for b in state.bags],
            "perm": list(state.perm),
            "residuals": [list(b) for b in state.residuals],
            "picks_left": list(state.picks_left),
            "totals": list(state.totals),
            "draw_log": [list(d) for d in state.draw_log],
        }

    def abort_score(self, state: TargetState) -> float:
        return float(state.totals[0])

    def move_to_text(self, move: Any) -> str:
        return f"pick {move.index}"

    def parse_move(self, text: str) -> Any:
        m = re.fullmatch(r"pick\s+(\d+)", text.strip())
        if not m:
            raise MoveFormatError(f"bad pick move: {text!r}")
        return PickBag(int(m.group(1)))


@register
class MaxTargetRules(_TargetRulesBase):
    puzzle_id = PuzzleId.MAX_TARGET
    players = 1
    score_direction = ScoreDirection.HIGHER_BETTER

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        if difficulty is Difficulty.EASY:
            return {"bag_count": 2, "coins_per_bag": 2, "max_guess": 2}
        return {"bag_count": 3, "coins_per_bag": 3, "max_guess": 4}

    def initial_state(self, template: PuzzleTemplate) -> TargetState:
        return self._initial(template, 1)

    def _abort(self, state: TargetState, reason: str) -> tuple[TargetState, Feedback]:
        outcome = GameOutcome.solo(state.totals[0])
        done = replace(state, phase=Phase.FINISHED, outcome=outcome,
                       turn_index=state.turn_index + 1)
        return done, Feedback.illegal(reason, outcome=outcome)

    def _maybe_finish(self, state: TargetState) -> tuple[TargetState, GameOutcome | None]:
        if state.picks_left[0] == 0 or not self.legal_moves(state):
            outcome = GameOutcome.solo(state.totals[0])
            return replace(state, phase=Phase.FINISHED, outcome=outcome), outcome
        return state, None


@register
class LargerTargetRules(_TargetRulesBase):
    puzzle_id = PuzzleId.LARGER_TARGET
    players = 2
    score_direction = ScoreDirection.WIN_LOSS

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        if difficulty is Difficulty.EASY:
            return {"bag_count": 2, "coins_per_bag": 2, "max_guess": 2}
        return {"bag_count": 3, "coins_per_bag": 3, "max_guess": 3}

    def initial_state(self, template: PuzzleTemplate) -> TargetState:
        return self._initial(template, 2)

    def _next_player(self, state: TargetState) -> int:
        other = 1 - state.active_player
        # Keep alternating while the other side still has picks.
        picks = list(state.picks_left)
        picks[state.active_player] -= 1
        return other if picks[other] > 0 else state.active_player

    def _abort(self, state: TargetState, reason: str) -> tuple[TargetState, Feedback]:
        outcome = GameOutcome.win(1 - state.active_player)
        done = replace(state, phase=Phase.FINISHED, outcome=outcome,
                       turn_index=state.turn_index + 1)
        return done, Feedback.illegal(reason, outcome=outcome)

    def _maybe_finish(self, state: TargetState) -> tuple[TargetState, GameOutcome | None]:
        exhausted = all(p == 0 for p in state.picks_left)
        if not exhausted and self.legal_moves(state):
            return state, None
        a, b = state.totals
        if a > b:
            outcome = GameOutcome.win(0)
        elif b > a:
            outcome = GameOutcome.win(1)
        else:
            outcome = GameOutcome.tie()
        return replace(state, phase=Phase.FINISHED, outcome=outcome), outcome
