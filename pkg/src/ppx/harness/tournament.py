"""Tournament orchestration: schedule, replays, tables.

A tournament file names the participants, the puzzles, and the protocol
mode.  The run produces a replay file per match plus Elo, win-matrix,
and status tables.  Everything downstream of the config is seeded, so a
rerun yields byte-identical artifacts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from ..core.replay import serialize_record
from ..core.rules import rules_for
from ..core.types import (
    Difficulty,
    MatchRecord,
    PpxError,
    PuzzleId,
    TerminationStatus,
)
from ..scoring import (
    MatchResult,
    RatingRow,
    csv_bytes,
    normalize_group,
    rating_rows,
    render_text_table,
    solo_to_matches,
    status_distribution,
    status_rows,
    tournament_elo,
    win_matrix,
    win_matrix_rows,
)
from ..strategies.catalog import make_agent
from .protocol import ProtocolSpec, _run_all
from .seats import BuiltinSeat, ExternalSeat, Seat


class ConfigError(PpxError):
    pass


@dataclass(frozen=True)
class ParticipantSpec:
    label: str
    kind: str  # "builtin" or "external"
    strategy: str = "random"  # builtin only
    command: tuple[str, ...] = ()  # external only

    def factory(self, puzzle_id: PuzzleId, time_limit: float) -> Callable[[], Seat]:
        if self.kind == "builtin":
            label = self.label
            strategy = self.strategy
            return lambda: BuiltinSeat(make_agent(puzzle_id, strategy), label)
        if self.kind == "external":
            label = self.label
            command = list(self.command)
            return lambda: ExternalSeat(command, label, time_limit)
        raise ConfigError(f"unknown participant kind {self.kind!r}")


@dataclass(frozen=True)
class TournamentConfig:
    participants: tuple[ParticipantSpec, ...]
    puzzles: tuple[tuple[PuzzleId, Difficulty], ...]
    mode: str = "program"
    move_time_limit: float = 30.0
    ordering_seed: int = 0
    elo_resamples: int = 1000

    @classmethod
    def from_json(cls, doc: dict) -> "TournamentConfig":
        try:
            participants = []
            for p in doc["participants"]:
                participants.append(
                    ParticipantSpec(
                        label=str(p["label"]),
                        kind=str(p.get("kind", "builtin")),
                        strategy=str(p.get("strategy", "random")),
                        command=tuple(p.get("command", ())),
                    )
                )
            puzzles = []
            for entry in doc["puzzles"]:
                puzzles.append(
                    (
                        PuzzleId(entry["puzzle"]),
                        Difficulty(entry.get("difficulty", "easy")),
                    )
                )
            return cls(
                participants=tuple(participants),
                puzzles=tuple(puzzles),
                mode=str(doc.get("mode", "program")),
                move_time_limit=float(doc.get("move_time_limit", 30.0)),
                ordering_seed=int(doc.get("ordering_seed", 0)),
                elo_resamples=int(doc.get("elo_resamples", 1000)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"bad tournament config: {exc}") from exc

    def __post_init__(self) -> None:
        if not self.participants:
            raise ConfigError("a tournament needs at least one participant")
        if not self.puzzles:
            raise ConfigError("a tournament needs at least one puzzle entry")
        labels = [p.label for p in self.participants]
        if len(set(labels)) != len(labels):
            raise ConfigError("participant labels must be unique")
        if self.mode not in ("instruction", "program"):
            raise ConfigError(f"unknown mode {self.mode!r}")


def load_config(path: str | Path) -> TournamentConfig:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return TournamentConfig.from_json(doc)


@dataclass(frozen=True)
class TournamentResult:
    records: tuple[MatchRecord, ...]
    match_log: tuple[MatchResult, ...]
    ratings: tuple[RatingRow, ...]
    win_matrix: dict
    status_table: dict
    tables: dict[str, str]


def replay_filename(record: MatchRecord) -> str:
    tpl = record.template
    seats = "-vs-".join(record.players)
    return (
        f"{tpl.puzzle_id.value}_{tpl.difficulty.value}_seed{tpl.seed:04d}_{seats}.ppxr"
    )


def match_results_from_records(
    records: tuple[MatchRecord, ...]
) -> tuple[MatchResult, ...]:
    """Duels feed Elo directly; solo runs meet pairwise per template."""
    duel: list[MatchResult] = []
    solo_groups: dict[tuple, dict[str, float]] = {}
    for record in records:
        rules = rules_for(record.template.puzzle_id)
        if rules.players == 2:
            duel.append(
                MatchResult(record.players[0], record.players[1], record.raw_scores[0])
            )
        else:
            key = (
                record.template.puzzle_id.value,
                record.template.difficulty.value,
                record.template.seed,
            )
            solo_groups.setdefault(key, {})[record.players[0]] = record.raw_scores[0]

    # normalize each solo group, then collect per-participant seed scores
    per_participant: dict[str, dict[tuple, float]] = {}
    for key, raw_by_name in sorted(solo_groups.items()):
        names = sorted(raw_by_name)
        rules = rules_for(PuzzleId(key[0]))
        normed = normalize_group(
            rules.score_direction, [raw_by_name[n] for n in names]
        )
        for name, score in zip(names, normed):
            per_participant.setdefault(name, {})[key] = score
    return tuple(duel) + solo_to_matches(per_participant)


def run_tournament(
    config: TournamentConfig, output_dir: str | Path | None = None
) -> TournamentResult:
    spec = ProtocolSpec(mode=config.mode, move_time_limit=config.move_time_limit)
    all_records: list[MatchRecord] = []
    for puzzle_id, difficulty in config.puzzles:
        factories = {
            p.label: p.factory(puzzle_id, config.move_time_limit)
            for p in config.participants
        }
        all_records.extend(_run_all(puzzle_id, difficulty, factories, spec))

    records = tuple(all_records)
    match_log = match_results_from_records(records)
    if match_log:
        ratings = tournament_elo(
            match_log,
            ordering_seed=config.ordering_seed,
            resamples=config.elo_resamples,
        )
    else:
        ratings = tuple(
            RatingRow(p.label, 1000.0, 1000.0, 1000.0, 0)
            for p in sorted(config.participants, key=lambda p: p.label)
        )
    matrix = win_matrix(match_log)
    statuses: dict[str, list[TerminationStatus]] = {}
    for record in records:
        for name, status in zip(record.players, record.statuses):
            statuses.setdefault(name, []).append(status)
    dist = status_distribution(statuses)

    headers, rows = rating_rows(ratings)
    tables = {
        "ratings.txt": render_text_table(headers, rows),
        "ratings.csv": csv_bytes(headers, rows),
    }
    headers, rows = win_matrix_rows(matrix)
    tables["win_matrix.txt"] = render_text_table(headers, rows)
    tables["win_matrix.csv"] = csv_bytes(headers, rows)
    headers, rows = status_rows(dist)
    tables["statuses.txt"] = render_text_table(headers, rows)
    tables["statuses.csv"] = csv_bytes(headers, rows)

    result = TournamentResult(
        records=records,
        match_log=match_log,
        ratings=ratings,
        win_matrix=matrix,
        status_table=dist,
        tables=tables,
    )
    if output_dir is not None:
        write_outputs(result, output_dir)
    return result


def write_outputs(result: TournamentResult, output_dir: str | Path) -> None:
    out = Path(output_dir)
    replays = out / "replays"
    replays.mkdir(parents=True, exist_ok=True)
    for record in result.records:
        path = replays / replay_filename(record)
        path.write_text(serialize_record(record), encoding="utf-8", newline="\n")
    for name, text in sorted(result.tables.items()):
        (out / name).write_text(text, encoding="utf-8", newline="\n")
