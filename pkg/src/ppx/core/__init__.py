from .engine import evaluate, instantiate, legal_moves, observe, state_digest, step
from .replay import (
    REPLAY_VERSION,
    parse_replay,
    read_replay,
    replay_roundtrip,
    serialize_record,
    write_replay,
)
from .rules import PuzzleRules, all_puzzle_ids, register, rules_for
from .types import (
    CapExceeded,
    CorruptReplay,
    Difficulty,
    Feedback,
    GameOutcome,
    GameState,
    GameUnfinished,
    InvalidTemplate,
    Legality,
    MalformedAnswer,
    MatchRecord,
    MoveFormatError,
    Phase,
    PpxError,
    PuzzleId,
    PuzzleTemplate,
    ScoreDirection,
    SteppedFinishedGame,
    TerminationStatus,
    TrajectoryStep,
    UnterminatedTrajectory,
    VariantMismatch,
)

__all__ = [
    "CapExceeded",
    "CorruptReplay",
    "Difficulty",
    "Feedback",
    "GameOutcome",
    "GameState",
    "GameUnfinished",
    "InvalidTemplate",
    "Legality",
    "MalformedAnswer",
    "MatchRecord",
    "MoveFormatError",
    "Phase",
    "PpxError",
    "PuzzleId",
    "PuzzleRules",
    "PuzzleTemplate",
    "REPLAY_VERSION",
    "ScoreDirection",
    "SteppedFinishedGame",
    "TerminationStatus",
    "TrajectoryStep",
    "UnterminatedTrajectory",
    "VariantMismatch",
    "all_puzzle_ids",
    "evaluate",
    "instantiate",
    "legal_moves",
    "observe",
    "parse_replay",
    "read_replay",
    "register",
    "replay_roundtrip",
    "rules_for",
    "serialize_record",
    "state_digest",
    "step",
    "write_replay",
]
