"""Puzzle ruleset interface and registry."""

from __future__ import annotations

import abc
from typing import Any, ClassVar, Iterable

from ..rng import DeterministicRng
from .types import (
    Difficulty,
    Feedback,
    GameState,
    InvalidTemplate,
    PuzzleId,
    PuzzleTemplate,
    ScoreDirection,
)


class PuzzleRules(abc.ABC):
    """One ruleset: generator, transition relation, observation, grammar.

    Implementations are stateless; all game data lives on immutable
    ``GameState`` subclasses so that stepping never mutates its input.
    """

    puzzle_id: ClassVar[PuzzleId]
    players: ClassVar[int]
    stochastic: ClassVar[bool]
    score_direction: ClassVar[ScoreDirection]

    @abc.abstractmethod
    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        ...

    def validate_template(self, template: PuzzleTemplate) -> None:
        expected = set(self.default_size_params(template.difficulty))
        got = set(template.size_params)
        if got != expected:
            raise InvalidTemplate(
                f"{self.puzzle_id.value}: size_params keys {sorted(got)} "
                f"!= expected {sorted(expected)}"
            )

    @abc.abstractmethod
    def initial_state(self, template: PuzzleTemplate) -> GameState:
        ...

    @abc.abstractmethod
    def legal_moves(self, state: GameState) -> tuple[Any, ...]:
        ...

    def legal_moves_exhaustive(self, state: GameState) -> bool:
        """False when the move space is unbounded and not enumerated."""
        return True

    def sample_move(self, state: GameState, rng: DeterministicRng) -> Any:
        """Uniform choice for enumerable spaces; overridden otherwise."""
        moves = self.legal_moves(state)
        return rng.choice(moves)

    @abc.abstractmethod
    def apply(self, state: GameState, move: Any) -> tuple[GameState, Feedback]:
        ...

    @abc.abstractmethod
    def observe(self, state: GameState, viewer: int) -> str:
        ...

    @abc.abstractmethod
    def payload(self, state: GameState) -> dict[str, Any]:
        """Full canonical state payload (hidden fields included) for digests."""

    def abort_score(self, state: GameState) -> float:
        """Solo raw score when a match ends abnormally mid-game."""
        return 0.0

    @abc.abstractmethod
    def move_to_text(self, move: Any) -> str:
        ...

    @abc.abstractmethod
    def parse_move(self, text: str) -> Any:
        ...


_REGISTRY: dict[PuzzleId, PuzzleRules] = {}


def register(rules_cls: type[PuzzleRules]) -> type[PuzzleRules]:
    """Class decorator: instantiate and index a ruleset by its puzzle id."""
    instance = rules_cls()
    _REGISTRY[rules_cls.puzzle_id] = instance
    return rules_cls


def rules_for(puzzle_id: PuzzleId) -> PuzzleRules:
    # Importing the puzzles package populates the registry.
    from .. import puzzles  # noqa: F401

    return _REGISTRY[puzzle_id]


def all_puzzle_ids() -> Iterable[PuzzleId]:
    from .. import puzzles  # noqa: F401

    return tuple(_REGISTRY)
