"""Stdio seats end to end: happy path, retries, and every failure status."""

import pytest

from conftest import agent_cmd, make_template
from ppx.core.types import Difficulty, PuzzleId, TerminationStatus
from ppx.harness.match import run_match
from ppx.harness.seats import FORMAT_ATTEMPTS, BuiltinSeat, ExternalSeat
from ppx.strategies.base import RandomAgent


def builtin():
    return BuiltinSeat(RandomAgent(), label="builtin")


def external(script, *args, time_limit=30.0, label=None):
    return ExternalSeat(
        agent_cmd(script, *args), label=label or script.split(".")[0],
        time_limit=time_limit,
    )


def test_follower_completes_a_duel_cleanly():
    template = make_template(PuzzleId.SUDOKILL, Difficulty.EASY, seed=1)
    record = run_match(template, [external("follow.py"), builtin()])
    assert record.statuses[0] is TerminationStatus.LEGAL
    assert record.players[0] == "follow"
    assert sum(record.raw_scores) == 1.0


def test_follower_matches_are_reproducible():
    template = make_template(PuzzleId.CARD_NIM, Difficulty.EASY, seed=2)
    one = run_match(template, [external("follow.py"), builtin()])
    two = run_match(template, [external("follow.py"), builtin()])
    assert one == two


def test_format_retries_accept_a_late_valid_move():
    # four wasted attempts still leave the fifth and final one to comply
    template = make_template(PuzzleId.CARD_NIM, Difficulty.EASY, seed=3)
    record = run_match(
        template,
        [external("stubborn.py", str(FORMAT_ATTEMPTS - 1)), builtin()],
    )
    assert record.statuses[0] is TerminationStatus.LEGAL
    assert len(record.trajectory) >= 2


def test_persistent_garbage_is_an_instruction_failure():
    template = make_template(PuzzleId.SUDOKILL, Difficulty.EASY, seed=4)
    record = run_match(template, [external("garbage.py"), builtin()])
    assert record.statuses[0] is TerminationStatus.NOT_FOLLOW_INSTRUCTION
    assert record.statuses[1] is TerminationStatus.LEGAL
    assert record.raw_scores == (0.0, 1.0)


def test_exhausting_every_attempt_is_an_instruction_failure():
    template = make_template(PuzzleId.CARD_NIM, Difficulty.EASY, seed=5)
    record = run_match(
        template, [external("stubborn.py", str(FORMAT_ATTEMPTS)), builtin()]
    )
    assert record.statuses[0] is TerminationStatus.NOT_FOLLOW_INSTRUCTION
    assert record.raw_scores == (0.0, 1.0)


def test_unresponsive_seat_times_out():
    template = make_template(PuzzleId.SUDOKILL, Difficulty.EASY, seed=6)
    record = run_match(
        template, [external("hang.py", time_limit=1.0), builtin()]
    )
    assert record.statuses[0] is TerminationStatus.TIMEOUT
    assert record.raw_scores == (0.0, 1.0)


def test_crashing_seat_is_a_runtime_error():
    template = make_template(PuzzleId.CARD_NIM, Difficulty.EASY, seed=7)
    record = run_match(template, [external("crash.py"), builtin()])
    assert record.statuses[0] is TerminationStatus.RUNTIME_ERROR
    assert record.statuses[1] is TerminationStatus.LEGAL
    assert record.raw_scores == (0.0, 1.0)


def test_unlaunchable_command_is_a_syntax_failure():
    template = make_template(PuzzleId.CARD_NIM, Difficulty.EASY, seed=8)
    seat = ExternalSeat(["/nonexistent/interpreter"], label="ghost")
    record = run_match(template, [seat, builtin()])
    assert record.statuses[0] is TerminationStatus.SYNTAX_ERROR
    assert record.raw_scores == (0.0, 1.0)


def test_failures_abort_a_solo_run_with_the_abort_score():
    template = make_template(PuzzleId.TIDY_TOWER, Difficulty.EASY, seed=9)
    record = run_match(template, [external("garbage.py")])
    assert record.statuses == (TerminationStatus.NOT_FOLLOW_INSTRUCTION,)
    assert record.raw_scores == (0.0,)  # tower left unsolved


def test_second_seat_failures_score_the_first_seat():
    template = make_template(PuzzleId.SUDOKILL, Difficulty.EASY, seed=10)
    record = run_match(template, [builtin(), external("garbage.py")])
    assert record.statuses[1] is TerminationStatus.NOT_FOLLOW_INSTRUCTION
    assert record.raw_scores == (1.0, 0.0)
