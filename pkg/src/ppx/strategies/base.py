"""Agent interface and the uniform-random baseline."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any

from ..core.rules import rules_for
from ..core.types import GameState, PuzzleTemplate
from ..rng import DeterministicRng


class Agent(ABC):
    """A move policy for one seat of one match.

    ``start`` is called once before the first move and binds the agent's
    private random stream to the match template, so a rerun of the same
    template reproduces every decision bit for bit.
    """

    name: str = "agent"

    def __init__(self) -> None:
        self.rng = DeterministicRng("ppx/agent/unbound")

    def start(self, template: PuzzleTemplate, player: int) -> None:
        self.rng = template.rng(f"agent/{player}/{self.name}")

    @abstractmethod
    def decide(self, state: GameState, player: int) -> Any:
        """Return a move object for the puzzle the state belongs to."""


class RandomAgent(Agent):
    """Uniform choice over the legal moves (or the rules' random guess
    when the move space is not exhaustively enumerable)."""

    name = "random"

    def decide(self, state: GameState, player: int) -> Any:
        rules = rules_for(state.template.puzzle_id)
        return rules.sample_move(state, self.rng)
