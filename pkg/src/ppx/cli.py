"""Command-line front end.

Exit codes: 0 success, 2 configuration problem, 3 corrupt replay.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from pathlib import Path

from .core.engine import instantiate, step as engine_step
from .core.replay import parse_replay, serialize_record
from .core.rules import all_puzzle_ids, rules_for
from .core.types import (
    CorruptReplay,
    Difficulty,
    Phase,
    PpxError,
    PuzzleId,
    PuzzleTemplate,
)
from .harness import (
    BuiltinSeat,
    ExternalSeat,
    MatchLimits,
    load_config,
    match_results_from_records,
    run_match,
    run_tournament,
)
from .scoring import (
    csv_bytes,
    rating_rows,
    render_text_table,
    status_distribution,
    status_rows,
    tournament_elo,
    win_matrix,
    win_matrix_rows,
)
from .strategies.catalog import available_strategies, make_agent

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CORRUPT = 3


def _puzzle(name: str) -> PuzzleId:
    try:
        return PuzzleId(name)
    except ValueError:
        known = ", ".join(p.value for p in all_puzzle_ids())
        raise PpxError(f"unknown puzzle {name!r}; known: {known}") from None


def _template(args: argparse.Namespace) -> PuzzleTemplate:
    puzzle_id = _puzzle(args.puzzle)
    difficulty = Difficulty(args.difficulty)
    rules = rules_for(puzzle_id)
    return PuzzleTemplate(
        puzzle_id, difficulty, rules.default_size_params(difficulty), args.seed
    )


def _seat(token: str, puzzle_id: PuzzleId, label: str, time_limit: float):
    if token.startswith("cmd:"):
        return ExternalSeat(shlex.split(token[4:]), label, time_limit)
    try:
        return BuiltinSeat(make_agent(puzzle_id, token), label)
    except PpxError:
        known = ", ".join(available_strategies(puzzle_id))
        raise PpxError(
            f"unknown agent {token!r}; builtin options: {known}; "
            "or use cmd:<program> for an external agent"
        ) from None


def cmd_gen(args: argparse.Namespace) -> int:
    template = _template(args)
    state = instantiate(template)
    rules = rules_for(template.puzzle_id)
    print(json.dumps(template.to_json(), sort_keys=True))
    print(rules.observe(state, 0))
    return EXIT_OK


def cmd_play(args: argparse.Namespace) -> int:
    template = _template(args)
    rules = rules_for(template.puzzle_id)
    tokens = [args.p1, args.p2][: rules.players]
    if rules.players == 2 and args.p2 is None:
        raise PpxError(f"{template.puzzle_id.value} needs --p2")
    seats = [
        _seat(token, template.puzzle_id, f"p{i + 1}", args.time_limit)
        for i, token in enumerate(tokens)
    ]
    record = run_match(template, seats, MatchLimits(max_turns=args.max_turns))
    for i, label in enumerate(record.players):
        print(
            f"{label}: raw={record.raw_scores[i]:g} status={record.statuses[i].value}"
        )
    if args.replay is not None:
        Path(args.replay).write_text(
            serialize_record(record), encoding="utf-8", newline="\n"
        )
        print(f"replay written to {args.replay}")
    return EXIT_OK


def cmd_tournament(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    result = run_tournament(config, args.out)
    print(result.tables["ratings.txt"], end="")
    if args.out is not None:
        print(f"artifacts written to {args.out}")
    return EXIT_OK


def cmd_score(args: argparse.Namespace) -> int:
    root = Path(args.replays)
    paths = sorted(root.rglob("*.ppxr")) if root.is_dir() else [root]
    if not paths:
        raise PpxError(f"no .ppxr files under {root}")
    records = []
    for path in paths:
        records.append(parse_replay(path.read_text(encoding="utf-8")))
    log = match_results_from_records(tuple(records))
    statuses: dict = {}
    for record in records:
        for name, status in zip(record.players, record.statuses):
            statuses.setdefault(name, []).append(status)
    tables = {}
    if log:
        ratings = tournament_elo(log, resamples=args.resamples)
        headers, rows = rating_rows(ratings)
        tables["ratings"] = (headers, rows)
        headers, rows = win_matrix_rows(win_matrix(log))
        tables["win_matrix"] = (headers, rows)
    headers, rows = status_rows(status_distribution(statuses))
    tables["statuses"] = (headers, rows)
    for name, (headers, rows) in tables.items():
        print(render_text_table(headers, rows), end="")
        print()
        if args.out is not None:
            out = Path(args.out)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{name}.csv").write_text(
                csv_bytes(headers, rows), encoding="utf-8", newline="\n"
            )
    return EXIT_OK


def cmd_export_replay(args: argparse.Namespace) -> int:
    text = Path(args.replay).read_text(encoding="utf-8")
    record = parse_replay(text)  # re-simulation validates every line
    template = record.template
    rules = rules_for(template.puzzle_id)
    print(f"puzzle: {template.puzzle_id.value} ({template.difficulty.value})")
    print(f"seed: {template.seed}  players: {', '.join(record.players)}")
    state = instantiate(template)
    for i, step_entry in enumerate(record.trajectory, start=1):
        mover = state.active_player
        label = record.players[mover]
        feedback = step_entry.feedback
        state, _ = engine_step(state, step_entry.move)
        line = f"turn {i:3d}  {label}: {rules.move_to_text(step_entry.move)}"
        if feedback.legality.value != "legal":
            line += f"  [illegal: {feedback.reason}]"
        if feedback.revealed:
            revealed = ", ".join(f"{k}={v}" for k, v in feedback.revealed)
            line += f"  ({revealed})"
        print(line)
    print("statuses: " + ", ".join(s.value for s in record.statuses))
    print("raw scores: " + ", ".join(f"{x:g}" for x in record.raw_scores))
    if state.phase is Phase.FINISHED and state.outcome is not None:
        print(rules.observe(state, 0))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppx",
        description="Seed-reproducible text puzzles, baseline agents, tournaments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance and show it")
    gen.add_argument("puzzle")
    gen.add_argument("--difficulty", default="easy", choices=["easy", "normal"])
    gen.add_argument("--seed", type=int, default=1)
    gen.set_defaults(func=cmd_gen)

    play = sub.add_parser("play", help="run one match")
    play.add_argument("puzzle")
    play.add_argument("--difficulty", default="easy", choices=["easy", "normal"])
    play.add_argument("--seed", type=int, default=1)
    play.add_argument("--p1", default="random")
    play.add_argument("--p2", default=None)
    play.add_argument("--time-limit", type=float, default=30.0)
    play.add_argument("--max-turns", type=int, default=1000)
    play.add_argument("--replay", default=None, help="write the replay here")
    play.set_defaults(func=cmd_play)

    tour = sub.add_parser("tournament", help="run a configured tournament")
    tour.add_argument("--config", required=True)
    tour.add_argument("--out", default=None, help="directory for replays and tables")
    tour.set_defaults(func=cmd_tournament)

    score = sub.add_parser("score", help="re-score a directory of replays")
    score.add_argument("replays")
    score.add_argument("--out", default=None)
    score.add_argument("--resamples", type=int, default=1000)
    score.set_defaults(func=cmd_score)

    export = sub.add_parser("export-replay", help="validate and print a replay")
    export.add_argument("replay")
    export.set_defaults(func=cmd_export_replay)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CorruptReplay as exc:
        print(f"corrupt replay: {exc}", file=sys.stderr)
        return EXIT_CORRUPT
    except (PpxError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
