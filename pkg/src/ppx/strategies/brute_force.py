"""Exhaustive and game-theoretically exact baselines for small worlds."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Any

from ..core.rules import rules_for
from ..puzzles.cocktails import (
    AnswerCount,
    AnswerSets,
    CocktailState,
    cocktail_count,
    cocktail_enumerate,
)
from ..puzzles.max_cocktails import AddEdge, MaxCocktailState, mmc_move_legal
from ..puzzles.particles import (
    ParticleState,
    PlaceParticle,
    cell_to_vector,
    legal_cells,
)
from .base import Agent


class CocktailExactAgent(Agent):
    """Answer the enumeration question exactly and end the game."""

    name = "brute"

    def decide(self, state: CocktailState, player: int) -> Any:
        if state.list_required:
            sets = cocktail_enumerate(state.num_nodes, state.edges)
            return AnswerSets(frozenset(frozenset(s) for s in sets))
        return AnswerCount(cocktail_count(state.num_nodes, state.edges))


def _mmc_moves(
    num_nodes: int, edges: frozenset[tuple[int, int]], strict: bool
) -> tuple[tuple[int, int], ...]:
    out = []
    for u, v in combinations(range(1, num_nodes + 1), 2):
        if (u, v) in edges:
            continue
        if mmc_move_legal(num_nodes, tuple(sorted(edges)), (u, v), strict):
            out.append((u, v))
    return tuple(out)


@lru_cache(maxsize=None)
def mmc_mover_wins(
    num_nodes: int, edges: frozenset[tuple[int, int]], strict: bool
) -> bool:
    """True when the side to move wins the edge-adding duel."""
    moves = _mmc_moves(num_nodes, edges, strict)
    if not moves:
        return False
    return any(
        not mmc_mover_wins(num_nodes, edges | {move}, strict) for move in moves
    )


class MaxCocktailsMinimaxAgent(Agent):
    """Perfect play for the edge-adding duel on its small boards."""

    name = "brute"

    def decide(self, state: MaxCocktailState, player: int) -> Any:
        edges = frozenset(state.edges)
        rules = rules_for(state.template.puzzle_id)
        strict = bool(getattr(rules, "strict_increase", False))
        moves = _mmc_moves(state.num_nodes, edges, strict)
        if not moves:
            # no legal edge exists; concede with a canonical illegal move
            return AddEdge(1, min(2, state.num_nodes))
        for move in moves:
            if not mmc_mover_wins(state.num_nodes, edges | {move}, strict):
                return AddEdge(*move)
        return AddEdge(*moves[0])


@lru_cache(maxsize=None)
def particles_mover_wins(
    dimension: int, placed: frozenset[int], min_distance: int
) -> bool:
    """True when the side to move wins the placement duel."""
    cells = legal_cells(dimension, placed, min_distance)
    if not cells:
        return False
    return any(
        not particles_mover_wins(dimension, placed | {cell}, min_distance)
        for cell in cells
    )


class ParticlesMinimaxAgent(Agent):
    """Perfect play for the hypercube placement duel."""

    name = "brute"

    def decide(self, state: ParticleState, player: int) -> Any:
        placed = frozenset(state.placed)
        cells = legal_cells(state.dimension, state.placed, state.min_distance)
        if not cells:
            return PlaceParticle(cell_to_vector(0, state.dimension))
        for cell in cells:
            if not particles_mover_wins(
                state.dimension, placed | {cell}, state.min_distance
            ):
                return PlaceParticle(cell_to_vector(cell, state.dimension))
        return PlaceParticle(cell_to_vector(cells[0], state.dimension))
