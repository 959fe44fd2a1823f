from .match import MatchLimits, WrongSeatCount, run_match
from .protocol import (
    DUEL_DETERMINISTIC_SEEDS,
    DUEL_STOCHASTIC_SEEDS,
    SOLO_DETERMINISTIC_SEEDS,
    SOLO_STOCHASTIC_SEEDS,
    ProtocolSpec,
    StochasticPuzzleRejected,
    play_schedule,
    run_instruction_protocol,
    run_program_protocol,
    run_program_samples,
    sample_aggregates,
)
from .seats import FORMAT_ATTEMPTS, BuiltinSeat, ExternalSeat, Seat, SeatFailure
from .tournament import (
    ConfigError,
    ParticipantSpec,
    TournamentConfig,
    TournamentResult,
    load_config,
    match_results_from_records,
    replay_filename,
    run_tournament,
    write_outputs,
)

__all__ = [
    "BuiltinSeat",
    "ConfigError",
    "DUEL_DETERMINISTIC_SEEDS",
    "DUEL_STOCHASTIC_SEEDS",
    "ExternalSeat",
    "FORMAT_ATTEMPTS",
    "MatchLimits",
    "ParticipantSpec",
    "ProtocolSpec",
    "SOLO_DETERMINISTIC_SEEDS",
    "SOLO_STOCHASTIC_SEEDS",
    "Seat",
    "SeatFailure",
    "StochasticPuzzleRejected",
    "TournamentConfig",
    "TournamentResult",
    "WrongSeatCount",
    "load_config",
    "match_results_from_records",
    "play_schedule",
    "replay_filename",
    "run_instruction_protocol",
    "run_program_protocol",
    "run_program_samples",
    "run_tournament",
    "sample_aggregates",
    "write_outputs",
]
