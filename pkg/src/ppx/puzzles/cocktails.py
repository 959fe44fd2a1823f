"""Maximal-independent-set enumeration and the counting puzzle built on it.

The party metaphor: nodes are guests, edges are conflicts, a "cocktail"
is a maximal set of mutually compatible guests.  Enumeration runs
Bron-Kerbosch with pivoting over the complement graph on bitmasks, so
cliques of the complement come out as maximal independent sets of the
original graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Any

from ..core.rules import PuzzleRules, register
from ..core.types import (
    CapExceeded,
    Difficulty,
    Feedback,
    GameOutcome,
    GameState,
    InvalidTemplate,
    MoveFormatError,
    Phase,
    PuzzleId,
    PuzzleTemplate,
    ScoreDirection,
)

ENUMERATION_CAP = 24  # nodes; 2^24 subsets is where exactness stops being free

Edge = tuple[int, int]


def _adjacency(num_nodes: int, edges: tuple[Edge, ...]) -> tuple[int, ...]:
    """Bitmask neighbour sets indexed by node (nodes are 1-based outside)."""
    adj = [0] * num_nodes
    for u, v in edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return tuple(adj)


@lru_cache(maxsize=65536)
def _maximal_cliques(num_nodes: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    """All maximal cliques of the graph given by bitmask adjacency."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        # Pivot on the candidate covering the most of p.
        pivot_pool = p | x
        pivot = max(
            (i for i in range(num_nodes) if pivot_pool >> i & 1),
            key=lambda i: bin(p & adj[i]).count("1"),
        )
        for v in range(num_nodes):
            if (p & ~adj[pivot]) >> v & 1:
                bit = 1 << v
                expand(r | bit, p & adj[v], x & adj[v])
                p &= ~bit
                x |= bit

    expand(0, (1 << num_nodes) - 1, 0)
    return tuple(sorted(out))


def cocktail_enumerate(
    num_nodes: int, edges: tuple[Edge, ...] | list[Edge]
) -> tuple[tuple[int, ...], ...]:
    """All maximal independent sets, each a sorted node tuple, in sorted order."""
    if num_nodes > ENUMERATION_CAP:
        raise CapExceeded(f"enumeration capped at {ENUMERATION_CAP} nodes")
    if num_nodes == 0:
        return ()
    comp = tuple(
        ~mask & ((1 << num_nodes) - 1) & ~(1 << i)
        for i, mask in enumerate(_adjacency(num_nodes, tuple(edges)))
    )
    masks = _maximal_cliques(num_nodes, comp)
    sets = tuple(
        tuple(i + 1 for i in range(num_nodes) if m >> i & 1) for m in masks
    )
    return tuple(sorted(sets))


def cocktail_count(num_nodes: int, edges: tuple[Edge, ...] | list[Edge]) -> int:
    return len(cocktail_enumerate(num_nodes, edges))


@dataclass(frozen=True)
class AnswerCount:
    count: int


@dataclass(frozen=True)
class AnswerSets:
    sets: frozenset[frozenset[int]]


@dataclass(frozen=True)
class CocktailState(GameState):
    num_nodes: int
    edges: tuple[Edge, ...]
    list_required: bool  # normal difficulty wants the full family


def cocktail_score(state: CocktailState, move: Any) -> float:
    """1.0 for the exact answer, 0.0 otherwise."""
    truth = cocktail_enumerate(state.num_nodes, state.edges)
    if state.list_required:
        want = frozenset(frozenset(s) for s in truth)
        return 1.0 if isinstance(move, AnswerSets) and move.sets == want else 0.0
    return 1.0 if isinstance(move, AnswerCount) and move.count == len(truth) else 0.0


@register
class CountMaximalCocktailsRules(PuzzleRules):
    puzzle_id = PuzzleId.COUNT_MAXIMAL_COCKTAILS
    players = 1
    stochastic = False
    score_direction = ScoreDirection.HIGHER_BETTER

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        return {"num_nodes": 6 if difficulty is Difficulty.EASY else 8}

    def validate_template(self, template: PuzzleTemplate) -> None:
        super().validate_template(template)
        n = template.size_params["num_nodes"]
        if not 1 <= n <= ENUMERATION_CAP:
            raise InvalidTemplate(f"num_nodes must be in 1..{ENUMERATION_CAP}")

    def initial_state(self, template: PuzzleTemplate) -> CocktailState:
        rng = template.rng("gen")
        n = template.size_params["num_nodes"]
        edges = tuple(
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < 0.35
        )
        return CocktailState(
            template=template,
            turn_index=0,
            active_player=0,
            phase=Phase.RUNNING,
            outcome=None,
            num_nodes=n,
            edges=edges,
            list_required=template.difficulty is Difficulty.NORMAL,
        )

    def legal_moves(self, state: CocktailState) -> tuple[Any, ...]:
        # The answer space is unbounded; see legal_moves_exhaustive.
        return ()

    def legal_moves_exhaustive(self, state: CocktailState) -> bool:
        return False

    def sample_move(self, state: CocktailState, rng) -> Any:
        if state.list_required:
            pick = frozenset(
                n for n in range(1, state.num_nodes + 1) if rng.random() < 0.5
            ) or frozenset({1})
            return AnswerSets(frozenset({pick}))
        return AnswerCount(rng.randint(1, max(2, state.num_nodes)))

    def apply(self, state: CocktailState, move: Any) -> tuple[CocktailState, Feedback]:
        if not isinstance(move, (AnswerCount, AnswerSets)):
            fb = Feedback.illegal("format: unrecognised answer", outcome=GameOutcome.solo(0.0))
            done = replace(state, phase=Phase.FINISHED, outcome=fb.outcome,
                           turn_index=state.turn_index + 1)
            return done, fb
        wrong_variant = isinstance(move, AnswerSets) != state.list_required
        if wrong_variant:
            fb = Feedback.illegal(
                "format: answer variant does not match difficulty",
                outcome=GameOutcome.solo(0.0),
            )
            done = replace(state, phase=Phase.FINISHED, outcome=fb.outcome,
                           turn_index=state.turn_index + 1)
            return done, fb
        score = cocktail_score(state, move)
        outcome = GameOutcome.solo(score)
        done = replace(state, phase=Phase.FINISHED, outcome=outcome,
                       turn_index=state.turn_index + 1)
        return done, Feedback.legal(terminated=True, outcome=outcome)

    def observe(self, state: CocktailState, viewer: int) -> str:
        kind = "list all maximal cocktails" if state.list_required else "count maximal cocktails"
        edges = " ".join(f"{u}-{v}" for u, v in state.edges) or "(none)"
        return (
            f"CountMaximalCocktails nodes={state.num_nodes} task={kind}\n"
            f"conflicts: {edges}"
        )

    def payload(self, state: CocktailState) -> dict[str, Any]:
        return {
            "num_nodes": state.num_nodes,
            "edges": [list(e) for e in state.edges],
            "list_required": state.list_required,
        }

    def move_to_text(self, move: Any) -> str:
        if isinstance(move, AnswerCount):
            return f"count {move.count}"
        groups = sorted(tuple(sorted(s)) for s in move.sets)
        return "sets " + ";".join(",".join(str(n) for n in g) for g in groups)

    def parse_move(self, text: str) -> Any:
        text = text.strip()
        m = re.fullmatch(r"count\s+(-?\d+)", text)
        if m:
            return AnswerCount(int(m.group(1)))
        m = re.fullmatch(r"sets\s+(\d+(?:,\d+)*(?:;\d+(?:,\d+)*)*)", text)
        if m:
            groups = frozenset(
                frozenset(int(n) for n in g.split(",")) for g in m.group(1).split(";")
            )
            return AnswerSets(groups)
        raise MoveFormatError(f"bad cocktail answer: {text!r}")
