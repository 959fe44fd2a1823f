"""Shared helpers for the test suite."""

from __future__ import annotations

import sys
from pathlib import Path

from ppx.core.rules import rules_for
from ppx.core.types import Difficulty, MatchRecord, PuzzleId, PuzzleTemplate
from ppx.harness.match import MatchLimits, run_match
from ppx.harness.seats import BuiltinSeat
from ppx.strategies.base import RandomAgent
from ppx.strategies.catalog import make_agent

AGENT_DIR = Path(__file__).parent / "agents"


def agent_cmd(script: str, *args: str) -> list[str]:
    """Command line for one of the stdio fixture agents."""
    return [sys.executable, str(AGENT_DIR / script), *args]


def make_template(
    puzzle_id: PuzzleId,
    difficulty: Difficulty = Difficulty.NORMAL,
    seed: int = 1,
    **overrides: int,
) -> PuzzleTemplate:
    rules = rules_for(puzzle_id)
    params = dict(rules.default_size_params(difficulty))
    params.update(overrides)
    return PuzzleTemplate(puzzle_id, difficulty, params, seed)


def play_builtin(template: PuzzleTemplate, agents, max_turns: int = 1000) -> MatchRecord:
    seats = [BuiltinSeat(agent) for agent in agents]
    return run_match(template, seats, MatchLimits(max_turns=max_turns))


def random_record(
    puzzle_id: PuzzleId,
    difficulty: Difficulty = Difficulty.NORMAL,
    seed: int = 1,
) -> MatchRecord:
    """One finished match of random seats, for replay/scoring tests."""
    template = make_template(puzzle_id, difficulty, seed)
    players = rules_for(puzzle_id).players
    return play_builtin(template, [RandomAgent() for _ in range(players)])


def head_to_head(
    puzzle_id: PuzzleId,
    difficulty: Difficulty,
    strategy: str,
    num_seeds: int = 100,
) -> int:
    """Wins for `strategy` vs random over num_seeds x both seat orders."""
    rules = rules_for(puzzle_id)
    assert rules.players == 2
    wins = 0
    for seed in range(1, num_seeds + 1):
        for hero in (0, 1):
            template = make_template(puzzle_id, difficulty, seed)
            agents: list = [None, None]
            agents[hero] = make_agent(puzzle_id, strategy)
            agents[1 - hero] = make_agent(puzzle_id, "random")
            record = play_builtin(template, agents)
            if record.raw_scores[hero] == 1.0:
                wins += 1
    return wins
