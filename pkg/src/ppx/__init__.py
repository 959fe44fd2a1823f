"""Seed-reproducible text puzzles with baseline agents and a tournament harness."""

from .core import (
    Difficulty,
    Feedback,
    GameOutcome,
    GameState,
    Legality,
    MatchRecord,
    Phase,
    PuzzleId,
    PuzzleRules,
    PuzzleTemplate,
    ScoreDirection,
    TerminationStatus,
    all_puzzle_ids,
    evaluate,
    instantiate,
    legal_moves,
    observe,
    parse_replay,
    read_replay,
    rules_for,
    serialize_record,
    state_digest,
    step,
    write_replay,
)
from .rng import DeterministicRng

__version__ = "0.1.0"

__all__ = [
    "DeterministicRng",
    "Difficulty",
    "Feedback",
    "GameOutcome",
    "GameState",
    "Legality",
    "MatchRecord",
    "Phase",
    "PuzzleId",
    "PuzzleRules",
    "PuzzleTemplate",
    "ScoreDirection",
    "TerminationStatus",
    "__version__",
    "all_puzzle_ids",
    "evaluate",
    "instantiate",
    "legal_moves",
    "observe",
    "parse_replay",
    "read_replay",
    "rules_for",
    "serialize_record",
    "state_digest",
    "step",
    "write_replay",
]
