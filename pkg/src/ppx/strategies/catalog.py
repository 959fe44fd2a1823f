"""Strategy lookup: which agent plays which puzzle at which difficulty."""

from __future__ import annotations

from typing import Callable

from ..core.types import Difficulty, PpxError, PuzzleId
from .annealing import TouringAnnealAgent
from .base import Agent, RandomAgent
from .brute_force import (
    CocktailExactAgent,
    MaxCocktailsMinimaxAgent,
    ParticlesMinimaxAgent,
)
from .dp import CardNimDpAgent, TidyTowerDpAgent
from .greedy import (
    BeatOrBombGreedyAgent,
    ParticlesGreedyAgent,
    ProbesGreedyAgent,
    SudokillGreedyAgent,
    TargetsGreedyAgent,
)
from .mcts import RubyMctsAgent
from .search import SuperplySearchAgent


class UnknownStrategy(PpxError):
    pass


_FACTORIES: dict[tuple[PuzzleId, str], Callable[[], Agent]] = {
    (PuzzleId.SUDOKILL, "greedy"): SudokillGreedyAgent,
    (PuzzleId.TIDY_TOWER, "dp"): TidyTowerDpAgent,
    (PuzzleId.CARD_NIM, "dp"): CardNimDpAgent,
    (PuzzleId.OPTIMAL_TOURING, "sa"): TouringAnnealAgent,
    (PuzzleId.COUNT_MAXIMAL_COCKTAILS, "brute"): CocktailExactAgent,
    (PuzzleId.MAX_MAXIMAL_COCKTAILS, "brute"): MaxCocktailsMinimaxAgent,
    (PuzzleId.EXCLUSIVITY_PARTICLES, "brute"): ParticlesMinimaxAgent,
    (PuzzleId.EXCLUSIVITY_PARTICLES, "greedy"): ParticlesGreedyAgent,
    (PuzzleId.EXCLUSIVITY_PROBES, "greedy"): ProbesGreedyAgent,
    (PuzzleId.RUBY_RISKS, "mcts"): RubyMctsAgent,
    (PuzzleId.BEAT_OR_BOMB, "greedy"): BeatOrBombGreedyAgent,
    (PuzzleId.MAX_TARGET, "greedy"): TargetsGreedyAgent,
    (PuzzleId.LARGER_TARGET, "greedy"): TargetsGreedyAgent,
    (PuzzleId.SUPERPLY, "search"): SuperplySearchAgent,
}

# Reference pairing of puzzle and difficulty to the baseline that plays it.
STRATEGY_TABLE: dict[PuzzleId, dict[Difficulty, str]] = {
    PuzzleId.SUDOKILL: {Difficulty.EASY: "random", Difficulty.NORMAL: "greedy"},
    PuzzleId.TIDY_TOWER: {Difficulty.EASY: "dp", Difficulty.NORMAL: "dp"},
    PuzzleId.CARD_NIM: {Difficulty.EASY: "random", Difficulty.NORMAL: "dp"},
    PuzzleId.OPTIMAL_TOURING: {Difficulty.EASY: "sa", Difficulty.NORMAL: "sa"},
    PuzzleId.COUNT_MAXIMAL_COCKTAILS: {
        Difficulty.EASY: "brute",
        Difficulty.NORMAL: "brute",
    },
    PuzzleId.MAX_MAXIMAL_COCKTAILS: {
        Difficulty.EASY: "random",
        Difficulty.NORMAL: "brute",
    },
    PuzzleId.EXCLUSIVITY_PARTICLES: {
        Difficulty.EASY: "brute",
        Difficulty.NORMAL: "greedy",
    },
    PuzzleId.EXCLUSIVITY_PROBES: {
        Difficulty.EASY: "random",
        Difficulty.NORMAL: "greedy",
    },
    PuzzleId.RUBY_RISKS: {Difficulty.EASY: "mcts", Difficulty.NORMAL: "mcts"},
    PuzzleId.BEAT_OR_BOMB: {Difficulty.EASY: "random", Difficulty.NORMAL: "greedy"},
    PuzzleId.MAX_TARGET: {Difficulty.EASY: "greedy", Difficulty.NORMAL: "greedy"},
    PuzzleId.LARGER_TARGET: {Difficulty.EASY: "random", Difficulty.NORMAL: "greedy"},
    PuzzleId.SUPERPLY: {Difficulty.EASY: "random", Difficulty.NORMAL: "search"},
}


def available_strategies(puzzle_id: PuzzleId) -> tuple[str, ...]:
    names = {"random"}
    names.update(n for pid, n in _FACTORIES if pid is puzzle_id)
    return tuple(sorted(names))


def make_agent(puzzle_id: PuzzleId, strategy: str) -> Agent:
    if strategy == "random":
        return RandomAgent()
    factory = _FACTORIES.get((puzzle_id, strategy))
    if factory is None:
        raise UnknownStrategy(
            f"{puzzle_id.value} has no strategy {strategy!r}; "
            f"choose from {', '.join(available_strategies(puzzle_id))}"
        )
    return factory()


def table_agent(puzzle_id: PuzzleId, difficulty: Difficulty) -> Agent:
    return make_agent(puzzle_id, STRATEGY_TABLE[puzzle_id][difficulty])
