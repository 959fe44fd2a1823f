"""Match schedules: who plays whom, on which seeds, in which order.

Two evaluation modes exist.  Instruction-style runs cover deterministic
puzzles only: solo on seeds 1-10, duels on seeds 1-5 with both seat
orders.  Program-style runs reuse that schedule for deterministic
puzzles and extend stochastic ones to seeds 1-100 (solo) or 1-50 with
alternating first player (duels).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..core.rules import rules_for
from ..core.types import Difficulty, MatchRecord, PpxError, PuzzleId, PuzzleTemplate
from .match import MatchLimits, run_match
from .seats import Seat

SeatFactory = Callable[[], Seat]

SOLO_DETERMINISTIC_SEEDS = tuple(range(1, 11))
DUEL_DETERMINISTIC_SEEDS = tuple(range(1, 6))
SOLO_STOCHASTIC_SEEDS = tuple(range(1, 101))
DUEL_STOCHASTIC_SEEDS = tuple(range(1, 51))


class StochasticPuzzleRejected(PpxError):
    pass


@dataclass(frozen=True)
class ProtocolSpec:
    mode: str  # "instruction" or "program"
    solo_deterministic_seeds: tuple[int, ...] = SOLO_DETERMINISTIC_SEEDS
    duel_deterministic_seeds: tuple[int, ...] = DUEL_DETERMINISTIC_SEEDS
    solo_stochastic_seeds: tuple[int, ...] = SOLO_STOCHASTIC_SEEDS
    duel_stochastic_seeds: tuple[int, ...] = DUEL_STOCHASTIC_SEEDS
    alternate_first_player: bool = True
    move_time_limit: float = 30.0
    limits: MatchLimits = field(default_factory=MatchLimits)

    def __post_init__(self) -> None:
        if self.mode not in ("instruction", "program"):
            raise PpxError(f"unknown protocol mode {self.mode!r}")

    def schedule(
        self, puzzle_id: PuzzleId
    ) -> tuple[tuple[int, tuple[int, ...]], ...]:
        """(seed, seat order) pairs for one participant or pair."""
        rules = rules_for(puzzle_id)
        if rules.stochastic and self.mode == "instruction":
            raise StochasticPuzzleRejected(
                f"{puzzle_id.value} is stochastic; instruction-style runs "
                "cover deterministic puzzles only"
            )
        if rules.players == 1:
            seeds = (
                self.solo_deterministic_seeds
                if not rules.stochastic
                else self.solo_stochastic_seeds
            )
            return tuple((seed, (0,)) for seed in seeds)
        if not rules.stochastic:
            out = []
            for seed in self.duel_deterministic_seeds:
                out.append((seed, (0, 1)))
                out.append((seed, (1, 0)))
            return tuple(out)
        out = []
        for i, seed in enumerate(self.duel_stochastic_seeds):
            order = (0, 1) if (not self.alternate_first_player or i % 2 == 0) else (1, 0)
            out.append((seed, order))
        return tuple(out)


def play_schedule(
    puzzle_id: PuzzleId,
    difficulty: Difficulty,
    factories: Sequence[SeatFactory],
    spec: ProtocolSpec,
) -> tuple[MatchRecord, ...]:
    """Run one participant (solo) or one pair (duel) over the schedule."""
    rules = rules_for(puzzle_id)
    if len(factories) != rules.players:
        raise PpxError(
            f"{puzzle_id.value} needs {rules.players} participants, got {len(factories)}"
        )
    records = []
    for seed, order in spec.schedule(puzzle_id):
        template = PuzzleTemplate(
            puzzle_id, difficulty, rules.default_size_params(difficulty), seed
        )
        seats = tuple(factories[who]() for who in order)
        records.append(run_match(template, seats, spec.limits))
    return tuple(records)


def run_instruction_protocol(
    puzzle_id: PuzzleId,
    difficulty: Difficulty,
    participants: dict[str, SeatFactory],
    spec: ProtocolSpec | None = None,
) -> tuple[MatchRecord, ...]:
    """Solo: every participant alone.  Duel: every unordered pair."""
    spec = spec if spec is not None else ProtocolSpec(mode="instruction")
    return _run_all(puzzle_id, difficulty, participants, spec)


def run_program_protocol(
    puzzle_id: PuzzleId,
    difficulty: Difficulty,
    participants: dict[str, SeatFactory],
    spec: ProtocolSpec | None = None,
) -> tuple[MatchRecord, ...]:
    spec = spec if spec is not None else ProtocolSpec(mode="program")
    return _run_all(puzzle_id, difficulty, participants, spec)


def _run_all(
    puzzle_id: PuzzleId,
    difficulty: Difficulty,
    participants: dict[str, SeatFactory],
    spec: ProtocolSpec,
) -> tuple[MatchRecord, ...]:
    rules = rules_for(puzzle_id)
    names = sorted(participants)
    records: list[MatchRecord] = []
    if rules.players == 1:
        for name in names:
            records.extend(
                play_schedule(puzzle_id, difficulty, [participants[name]], spec)
            )
    else:
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                records.extend(
                    play_schedule(
                        puzzle_id, difficulty, [participants[a], participants[b]], spec
                    )
                )
    return tuple(records)


def run_program_samples(
    puzzle_id: PuzzleId,
    difficulty: Difficulty,
    samples: dict[str, SeatFactory],
    baseline: tuple[str, SeatFactory] | None = None,
    all_pairs: bool = False,
    spec: ProtocolSpec | None = None,
) -> tuple[MatchRecord, ...]:
    """Duel schedule for repeated program samples.

    By default each sample meets only the fixed baseline opponent; the
    all_pairs switch makes every unordered sample pair play instead.
    """
    spec = spec if spec is not None else ProtocolSpec(mode="program")
    rules = rules_for(puzzle_id)
    if rules.players == 1:
        return _run_all(puzzle_id, difficulty, dict(samples), spec)
    if all_pairs:
        return _run_all(puzzle_id, difficulty, dict(samples), spec)
    if baseline is None:
        raise PpxError("sample-vs-baseline pairing needs a baseline participant")
    records: list[MatchRecord] = []
    _, base_factory = baseline
    for name in sorted(samples):
        records.extend(
            play_schedule(
                puzzle_id, difficulty, [samples[name], base_factory], spec
            )
        )
    return tuple(records)


def sample_aggregates(per_sample_means: Sequence[float]) -> dict[str, float]:
    """Avg and Best across repeated program samples."""
    if not per_sample_means:
        raise PpxError("no sample means to aggregate")
    return {
        "avg": sum(per_sample_means) / len(per_sample_means),
        "best": max(per_sample_means),
    }
