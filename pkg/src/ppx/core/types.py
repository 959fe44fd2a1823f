"""Shared engine types: identifiers, templates, feedback, match records."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping

from ..rng import DeterministicRng


class PuzzleId(str, Enum):
    SUDOKILL = "sudokill"
    TIDY_TOWER = "tidy_tower"
    CARD_NIM = "card_nim"
    OPTIMAL_TOURING = "optimal_touring"
    COUNT_MAXIMAL_COCKTAILS = "count_maximal_cocktails"
    MAX_MAXIMAL_COCKTAILS = "max_maximal_cocktails"
    EXCLUSIVITY_PARTICLES = "exclusivity_particles"
    EXCLUSIVITY_PROBES = "exclusivity_probes"
    RUBY_RISKS = "ruby_risks"
    BEAT_OR_BOMB = "beat_or_bomb"
    MAX_TARGET = "max_target"
    LARGER_TARGET = "larger_target"
    SUPERPLY = "superply"


class Difficulty(str, Enum):
    EASY = "easy"
    NORMAL = "normal"


class Phase(str, Enum):
    RUNNING = "running"
    FINISHED = "finished"


class Legality(str, Enum):
    LEGAL = "legal"
    ILLEGAL = "illegal"


class ScoreDirection(str, Enum):
    HIGHER_BETTER = "higher_better"
    LOWER_BETTER = "lower_better"
    # Two-player raw scores are already in {0, 0.5, 1} and pass through.
    WIN_LOSS = "win_loss"


class TerminationStatus(str, Enum):
    LEGAL = "Legal"
    NOT_FOLLOW_INSTRUCTION = "NotFollowInstruction"
    TIMEOUT = "Timeout"
    RULE_VIOLATION = "RuleViolation"
    RUNTIME_ERROR = "RuntimeError"
    SYNTAX_ERROR = "SyntaxError"


class PpxError(Exception):
    """Base class for engine errors."""


class InvalidTemplate(PpxError):
    pass


class VariantMismatch(PpxError):
    """Move type does not belong to the puzzle being stepped."""


class SteppedFinishedGame(PpxError):
    pass


class UnterminatedTrajectory(PpxError):
    pass


class CorruptReplay(PpxError):
    pass


class MoveFormatError(PpxError):
    """Move text does not match the puzzle's single-line grammar."""


class CapExceeded(PpxError):
    """Instance size beyond a documented enumeration cap."""


class GameUnfinished(PpxError):
    pass


class MalformedAnswer(PpxError):
    pass


@dataclass(frozen=True)
class PuzzleTemplate:
    """Everything needed to regenerate one puzzle instance."""

    puzzle_id: PuzzleId
    difficulty: Difficulty
    size_params: Mapping[str, int]
    seed: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "size_params", dict(self.size_params))
        if not (0 <= self.seed < 2**64):
            raise InvalidTemplate("seed must fit in uint64")

    @property
    def key(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in sorted(self.size_params.items()))
        return (
            f"ppx/{self.puzzle_id.value}/{self.difficulty.value}/{params}/{self.seed}"
        )

    def rng(self, label: str) -> DeterministicRng:
        return DeterministicRng(f"{self.key}/{label}")

    def to_json(self) -> dict[str, Any]:
        return {
            "puzzle": self.puzzle_id.value,
            "difficulty": self.difficulty.value,
            "size_params": dict(sorted(self.size_params.items())),
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "PuzzleTemplate":
        try:
            return cls(
                puzzle_id=PuzzleId(data["puzzle"]),
                difficulty=Difficulty(data["difficulty"]),
                size_params={str(k): int(v) for k, v in data["size_params"].items()},
                seed=int(data["seed"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidTemplate(f"bad template payload: {exc}") from exc


@dataclass(frozen=True)
class GameOutcome:
    """Terminal result: a duel winner, a tie, or a solo raw score."""

    winner: int | None = None
    is_tie: bool = False
    solo_score: float | None = None

    @classmethod
    def win(cls, player: int) -> "GameOutcome":
        return cls(winner=player)

    @classmethod
    def tie(cls) -> "GameOutcome":
        return cls(is_tie=True)

    @classmethod
    def solo(cls, score: float) -> "GameOutcome":
        return cls(solo_score=float(score))

    def to_json(self) -> dict[str, Any]:
        if self.is_tie:
            return {"tie": True}
        if self.winner is not None:
            return {"winner": self.winner}
        return {"solo_score": self.solo_score}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "GameOutcome":
        if data.get("tie"):
            return cls.tie()
        if "winner" in data:
            return cls.win(int(data["winner"]))
        return cls.solo(float(data["solo_score"]))


@dataclass(frozen=True)
class Feedback:
    """Per-move verdict returned by the transition function."""

    legality: Legality
    terminated: bool
    reason: str | None = None
    outcome: GameOutcome | None = None
    revealed: tuple[tuple[str, Any], ...] | None = None

    @classmethod
    def legal(
        cls,
        terminated: bool = False,
        outcome: GameOutcome | None = None,
        revealed: Mapping[str, Any] | None = None,
    ) -> "Feedback":
        rev = tuple(sorted(revealed.items())) if revealed else None
        return cls(Legality.LEGAL, terminated, None, outcome, rev)

    @classmethod
    def illegal(
        cls,
        reason: str,
        terminated: bool = True,
        outcome: GameOutcome | None = None,
    ) -> "Feedback":
        return cls(Legality.ILLEGAL, terminated, reason, outcome, None)

    def to_json(self) -> dict[str, Any]:
        return {
            "legality": self.legality.value,
            "terminated": self.terminated,
            "reason": self.reason,
            "outcome": self.outcome.to_json() if self.outcome else None,
            "revealed": dict(self.revealed) if self.revealed else None,
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "Feedback":
        revealed = data.get("revealed")
        return cls(
            legality=Legality(data["legality"]),
            terminated=bool(data["terminated"]),
            reason=data.get("reason"),
            outcome=GameOutcome.from_json(data["outcome"]) if data.get("outcome") else None,
            revealed=tuple(sorted(revealed.items())) if revealed else None,
        )


@dataclass(frozen=True)
class GameState:
    """Base state; puzzle modules subclass with payload fields."""

    template: PuzzleTemplate
    turn_index: int
    active_player: int
    phase: Phase
    outcome: GameOutcome | None


@dataclass(frozen=True)
class TrajectoryStep:
    """One applied move: digest of the post-move state, the move, its feedback."""

    digest: str
    move: Any
    feedback: Feedback


@dataclass
class MatchRecord:
    """Full account of one match, sufficient to re-simulate it."""

    template: PuzzleTemplate
    players: tuple[str, ...]
    trajectory: tuple[TrajectoryStep, ...]
    statuses: tuple[TerminationStatus, ...]
    raw_scores: tuple[float, ...]
    # Wall time is diagnostic only and never serialized: replay files must
    # be byte-identical across runs of the same configuration.
    wall_time: float = field(default=0.0, compare=False)
