"""Belief-state tree search for the hidden-box gambling puzzle.

Each simulation samples a hidden split consistent with the observed
(request, gain) history, then walks a UCT tree whose chance outcomes are
driven by that sample.  Values therefore average over the posterior, the
way the real game does.
"""

from __future__ import annotations

import math
from typing import Any

from ..puzzles.ruby_risks import (
    Request,
    RubyState,
    consistent_compositions,
    ruby_resolve,
    uniform_composition,
)
from .base import Agent

Path = tuple[tuple[int, int], ...]  # (request, gain) pairs below the root


def _consistent(comp: tuple[int, ...], history) -> bool:
    for i, (request, gain) in enumerate(history):
        if gain == request:
            if comp[i] < request:
                return False
        elif comp[i] >= request:
            return False
    return True


class RubyMctsAgent(Agent):
    """Determinized UCT over request amounts."""

    name = "mcts"

    def __init__(
        self,
        simulations: int = 2000,
        exploration: float = math.sqrt(2.0),
        sample_tries: int = 64,
    ) -> None:
        super().__init__()
        self.simulations = simulations
        self.exploration = exploration
        self.sample_tries = sample_tries
        self._exhaustive: tuple[tuple[int, ...], ...] | None = None

    def _sample_hidden(self, state: RubyState) -> tuple[int, ...]:
        for _ in range(self.sample_tries):
            comp = uniform_composition(state.total_rubies, state.num_boxes, self.rng)
            if _consistent(comp, state.history):
                return comp
        if self._exhaustive is None:
            self._exhaustive = consistent_compositions(
                state.total_rubies, state.num_boxes, state.history
            )
        return self._exhaustive[self.rng.randrange(len(self._exhaustive))]

    def decide(self, state: RubyState, player: int) -> Any:
        _, arm_n, _, _, root_cap, _ = self._search(state)
        pick = 0
        best_n = -1
        for amount in range(root_cap + 1):
            n = arm_n.get(((), amount), 0)
            if n > best_n:
                best_n = n
                pick = amount
        return Request(pick)

    def root_value(self, state: RubyState) -> float:
        """Estimated rubies still collectable from here under best play.

        Reads the search tree as an expectimax: max over arms, with
        grant/bounce branches weighted by their observed frequencies.
        Plain mean backup would mix exploration traffic into the value.
        """
        visits, arm_n, arm_w, scale, root_cap, boxes_left = self._search(state)

        def value(path: Path) -> float:
            if boxes_left - len(path) <= 0:
                return 0.0
            cap = root_cap - sum(g for _, g in path)
            best = 0.0
            for amount in range(cap + 1):
                arm = (path, amount)
                n = arm_n.get(arm, 0)
                if not n:
                    continue
                granted = path + ((amount, amount),)
                bounced = path + ((amount, 0),)
                n_g = visits.get(granted, 0)
                n_b = visits.get(bounced, 0)
                if n_g + n_b:
                    p = n_g / (n_g + n_b)
                    val = p * (amount + value(granted)) + (1 - p) * value(bounced)
                else:
                    # unexpanded arm: only its rollout mean is available
                    past = sum(g for _, g in path)
                    val = arm_w[arm] / n * scale - past
                best = max(best, val)
            return best

        return value(())

    def _search(self, state: RubyState):
        self._exhaustive = None
        root_cap = state.total_rubies - state.collected
        boxes_left = state.num_boxes - state.box_index
        if boxes_left <= 0:
            return {}, {}, {}, 1.0, 0, 0
        scale = float(max(root_cap, 1))
        visits: dict[Path, int] = {(): 0}
        arm_n: dict[tuple[Path, int], int] = {}
        arm_w: dict[tuple[Path, int], float] = {}

        for _ in range(self.simulations):
            comp = self._sample_hidden(state)
            path: Path = ()
            box = state.box_index
            taken = 0
            walked: list[tuple[Path, int]] = []
            while box < state.num_boxes:
                cap = root_cap - taken
                if path not in visits:
                    visits[path] = 0
                    # fresh leaf: finish this sample with random requests
                    taken += self._rollout(comp, box, cap)
                    break
                parent_n = visits[path]
                choice = None
                best = -1.0
                for amount in range(cap + 1):
                    arm = (path, amount)
                    n = arm_n.get(arm, 0)
                    if n == 0:
                        choice = amount
                        break
                    mean = arm_w[arm] / n
                    bonus = self.exploration * math.sqrt(
                        math.log(max(parent_n, 1)) / n
                    )
                    if mean + bonus > best:
                        best = mean + bonus
                        choice = amount
                gain = ruby_resolve(comp[box], choice)
                taken += gain
                walked.append((path, choice))
                path = path + ((choice, gain),)
                box += 1
            reward = taken / scale
            for node_path, amount in walked:
                visits[node_path] += 1
                arm = (node_path, amount)
                arm_n[arm] = arm_n.get(arm, 0) + 1
                arm_w[arm] = arm_w.get(arm, 0.0) + reward
            if path in visits:
                visits[path] += 1

        return visits, arm_n, arm_w, scale, root_cap, boxes_left

    def _rollout(self, comp: tuple[int, ...], box: int, cap: int) -> int:
        taken = 0
        for b in range(box, len(comp)):
            amount = self.rng.randint(0, cap - taken)
            taken += ruby_resolve(comp[b], amount)
        return taken
