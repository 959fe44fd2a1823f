from .annealing import TouringAnnealAgent, anneal_tour
from .base import Agent, RandomAgent
from .brute_force import (
    CocktailExactAgent,
    MaxCocktailsMinimaxAgent,
    ParticlesMinimaxAgent,
    mmc_mover_wins,
    particles_mover_wins,
)
from .catalog import (
    STRATEGY_TABLE,
    UnknownStrategy,
    available_strategies,
    make_agent,
    table_agent,
)
from .dp import CardNimDpAgent, TidyTowerDpAgent, cardnim_wins
from .greedy import (
    BeatOrBombGreedyAgent,
    ParticlesGreedyAgent,
    ProbesGreedyAgent,
    SudokillGreedyAgent,
    TargetsGreedyAgent,
)
from .mcts import RubyMctsAgent
from .search import SuperplySearchAgent, path_cost

__all__ = [
    "Agent",
    "BeatOrBombGreedyAgent",
    "CardNimDpAgent",
    "CocktailExactAgent",
    "MaxCocktailsMinimaxAgent",
    "ParticlesGreedyAgent",
    "ParticlesMinimaxAgent",
    "ProbesGreedyAgent",
    "RandomAgent",
    "RubyMctsAgent",
    "STRATEGY_TABLE",
    "SudokillGreedyAgent",
    "SuperplySearchAgent",
    "TargetsGreedyAgent",
    "TidyTowerDpAgent",
    "TouringAnnealAgent",
    "UnknownStrategy",
    "anneal_tour",
    "available_strategies",
    "cardnim_wins",
    "make_agent",
    "mmc_mover_wins",
    "particles_mover_wins",
    "path_cost",
    "table_agent",
]
