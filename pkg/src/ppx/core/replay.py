"""Line-delimited JSON replay files: serialize, parse, verify.

Format ``ppx-replay/1``: a header line carrying the template, player
labels, termination statuses, and raw scores, then one line per applied
move holding the move text, its feedback, and a digest of the post-move
state.  Serialisation is canonical (sorted keys, fixed separators), so
identical matches produce byte-identical files.
"""

from __future__ import annotations

import json
from typing import Iterable

from .engine import instantiate, state_digest, step
from .rules import rules_for
from .types import (
    CorruptReplay,
    Feedback,
    MatchRecord,
    MoveFormatError,
    Phase,
    PpxError,
    PuzzleTemplate,
    TerminationStatus,
    TrajectoryStep,
)

REPLAY_VERSION = "ppx-replay/1"


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def serialize_record(record: MatchRecord) -> str:
    rules = rules_for(record.template.puzzle_id)
    lines = [
        _dump(
            {
                "version": REPLAY_VERSION,
                "template": record.template.to_json(),
                "players": list(record.players),
                "statuses": [s.value for s in record.statuses],
                "raw_scores": list(record.raw_scores),
            }
        )
    ]
    for step_entry in record.trajectory:
        lines.append(
            _dump(
                {
                    "move": rules.move_to_text(step_entry.move),
                    "feedback": step_entry.feedback.to_json(),
                    "digest": step_entry.digest,
                }
            )
        )
    return "\n".join(lines) + "\n"


def parse_replay(text: str) -> MatchRecord:
    """Parse and re-simulate; any divergence raises CorruptReplay."""
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines:
        raise CorruptReplay("empty replay")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise CorruptReplay(f"bad header json: {exc}") from exc
    if header.get("version") != REPLAY_VERSION:
        raise CorruptReplay(f"unsupported version {header.get('version')!r}")
    try:
        template = PuzzleTemplate.from_json(header["template"])
        players = tuple(str(p) for p in header["players"])
        statuses = tuple(TerminationStatus(s) for s in header["statuses"])
        raw_scores = tuple(float(x) for x in header["raw_scores"])
    except (KeyError, TypeError, ValueError, PpxError) as exc:
        raise CorruptReplay(f"bad header fields: {exc}") from exc

    rules = rules_for(template.puzzle_id)
    try:
        state = instantiate(template)
    except PpxError as exc:
        raise CorruptReplay(f"template does not instantiate: {exc}") from exc

    trajectory: list[TrajectoryStep] = []
    for i, line in enumerate(lines[1:], start=1):
        try:
            doc = json.loads(line)
            move = rules.parse_move(doc["move"])
            feedback = Feedback.from_json(doc["feedback"])
            digest = str(doc["digest"])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError,
                MoveFormatError) as exc:
            raise CorruptReplay(f"line {i}: {exc}") from exc
        if state.phase is Phase.FINISHED:
            raise CorruptReplay(f"line {i}: move after the game finished")
        state, fb = step(state, move)
        if fb != feedback:
            raise CorruptReplay(f"line {i}: feedback diverges on re-simulation")
        if state_digest(state) != digest:
            raise CorruptReplay(f"line {i}: state digest diverges on re-simulation")
        trajectory.append(TrajectoryStep(digest, move, feedback))

    return MatchRecord(
        template=template,
        players=players,
        trajectory=tuple(trajectory),
        statuses=statuses,
        raw_scores=raw_scores,
    )


def replay_roundtrip(record: MatchRecord) -> MatchRecord:
    """serialize -> parse -> re-simulate; returns the reconstructed record."""
    return parse_replay(serialize_record(record))


def write_replay(path, record: MatchRecord) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_record(record))


def read_replay(path) -> MatchRecord:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_replay(fh.read())
