"""Replay files: canonical serialization and tamper-evident re-simulation."""

import json

import pytest

from conftest import random_record
from ppx.core.replay import (
    REPLAY_VERSION,
    parse_replay,
    read_replay,
    replay_roundtrip,
    serialize_record,
    write_replay,
)
from ppx.core.rules import all_puzzle_ids
from ppx.core.types import CorruptReplay, Difficulty, PuzzleId


def test_every_puzzle_roundtrips():
    for pid in all_puzzle_ids():
        record = random_record(pid, Difficulty.EASY, seed=5)
        assert replay_roundtrip(record) == record, pid


def test_serialization_is_stable_bytes():
    record = random_record(PuzzleId.CARD_NIM, Difficulty.EASY, seed=6)
    assert serialize_record(record) == serialize_record(record)


def test_header_carries_version_and_scores():
    record = random_record(PuzzleId.CARD_NIM, Difficulty.EASY, seed=6)
    header = json.loads(serialize_record(record).splitlines()[0])
    assert header["version"] == REPLAY_VERSION == "ppx-replay/1"
    assert header["raw_scores"] == list(record.raw_scores)
    assert header["statuses"] == [s.value for s in record.statuses]
    assert "wall_time" not in json.dumps(header)


def test_wall_time_never_serialized():
    record = random_record(PuzzleId.TIDY_TOWER, Difficulty.EASY, seed=2)
    assert "wall_time" not in serialize_record(record)


def test_file_roundtrip(tmp_path):
    record = random_record(PuzzleId.SUPERPLY, Difficulty.EASY, seed=3)
    path = tmp_path / "match.ppxr"
    write_replay(path, record)
    again = read_replay(path)
    assert again == record


def test_rejects_unknown_version():
    record = random_record(PuzzleId.CARD_NIM, Difficulty.EASY, seed=6)
    lines = serialize_record(record).splitlines()
    header = json.loads(lines[0])
    header["version"] = "ppx-replay/999"
    lines[0] = json.dumps(header, sort_keys=True, separators=(",", ":"))
    with pytest.raises(CorruptReplay):
        parse_replay("\n".join(lines) + "\n")


def test_rejects_tampered_move():
    record = random_record(PuzzleId.CARD_NIM, Difficulty.EASY, seed=7)
    lines = serialize_record(record).splitlines()
    step = json.loads(lines[1])
    step["move"] = "play 999"
    lines[1] = json.dumps(step, sort_keys=True, separators=(",", ":"))
    with pytest.raises(CorruptReplay):
        parse_replay("\n".join(lines) + "\n")


def test_rejects_tampered_digest():
    record = random_record(PuzzleId.CARD_NIM, Difficulty.EASY, seed=8)
    lines = serialize_record(record).splitlines()
    step = json.loads(lines[1])
    step["digest"] = "0" * 16
    lines[1] = json.dumps(step, sort_keys=True, separators=(",", ":"))
    with pytest.raises(CorruptReplay):
        parse_replay("\n".join(lines) + "\n")


def test_rejects_truncated_header():
    record = random_record(PuzzleId.CARD_NIM, Difficulty.EASY, seed=9)
    lines = serialize_record(record).splitlines()
    header = json.loads(lines[0])
    del header["raw_scores"]
    lines[0] = json.dumps(header, sort_keys=True, separators=(",", ":"))
    with pytest.raises(CorruptReplay):
        parse_replay("\n".join(lines) + "\n")


def test_rejects_moves_after_finish():
    record = random_record(PuzzleId.CARD_NIM, Difficulty.EASY, seed=10)
    text = serialize_record(record)
    lines = text.splitlines()
    with pytest.raises(CorruptReplay):
        parse_replay("\n".join(lines + [lines[-1]]) + "\n")


def test_rejects_garbage_step_line():
    record = random_record(PuzzleId.CARD_NIM, Difficulty.EASY, seed=11)
    lines = serialize_record(record).splitlines()
    lines.insert(1, "not json")
    with pytest.raises(CorruptReplay):
        parse_replay("\n".join(lines) + "\n")
