"""Edge-adding duel over the maximal-independent-set count.

Players alternately add a missing edge; a move is legal while the count
of maximal cocktails does not decrease (a strict-increase variant sits
behind ``strict_increase``).  Adding a decreasing edge, or having no
edge left to add, loses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Any

from ..core.rules import PuzzleRules, register
from ..core.types import (
    Difficulty,
    Feedback,
    GameOutcome,
    GameState,
    InvalidTemplate,
    MoveFormatError,
    Phase,
    PpxError,
    PuzzleId,
    PuzzleTemplate,
    ScoreDirection,
)
from .cocktails import Edge, cocktail_count


class DuplicateEdge(PpxError):
    pass


class SelfLoop(PpxError):
    pass


def mmc_move_legal(
    num_nodes: int,
    edges: tuple[Edge, ...],
    new_edge: Edge,
    strict_increase: bool = False,
) -> bool:
    """Legality of adding new_edge: the cocktail count must not drop
    (or must rise, under the strict variant)."""
    u, v = new_edge
    if u == v:
        raise SelfLoop(f"edge {new_edge} is a self-loop")
    if not (1 <= u <= num_nodes and 1 <= v <= num_nodes):
        return False
    key = (min(u, v), max(u, v))
    if key in edges:
        raise DuplicateEdge(f"edge {key} already present")
    before = cocktail_count(num_nodes, edges)
    after = cocktail_count(num_nodes, edges + (key,))
    return after > before if strict_increase else after >= before


@dataclass(frozen=True)
class AddEdge:
    u: int
    v: int


@dataclass(frozen=True)
class MaxCocktailState(GameState):
    num_nodes: int
    edges: tuple[Edge, ...]
    mis_count: int


@register
class MaxMaximalCocktailsRules(PuzzleRules):
    puzzle_id = PuzzleId.MAX_MAXIMAL_COCKTAILS
    players = 2
    stochastic = False
    score_direction = ScoreDirection.WIN_LOSS
    strict_increase = False

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        return {"num_nodes": 4 if difficulty is Difficulty.EASY else 6}

    def validate_template(self, template: PuzzleTemplate) -> None:
        super().validate_template(template)
        if not 2 <= template.size_params["num_nodes"] <= 8:
            raise InvalidTemplate("num_nodes must be in 2..8")

    def initial_state(self, template: PuzzleTemplate) -> MaxCocktailState:
        n = template.size_params["num_nodes"]
        return MaxCocktailState(
            template=template,
            turn_index=0,
            active_player=0,
            phase=Phase.RUNNING,
            outcome=None,
            num_nodes=n,
            edges=(),
            mis_count=cocktail_count(n, ()),
        )

    def legal_moves(self, state: MaxCocktailState) -> tuple[Any, ...]:
        if state.phase is Phase.FINISHED:
            return ()
        present = set(state.edges)
        out = []
        for u in range(1, state.num_nodes + 1):
            for v in range(u + 1, state.num_nodes + 1):
                if (u, v) in present:
                    continue
                if mmc_move_legal(state.num_nodes, state.edges, (u, v),
                                  self.strict_increase):
                    out.append(AddEdge(u, v))
        return tuple(out)

    def apply(self, state: MaxCocktailState, move: Any) -> tuple[MaxCocktailState, Feedback]:
        mover = state.active_player
        opponent = 1 - mover
        bad = None
        if not isinstance(move, AddEdge):
            bad = "unrecognised move variant"
        else:
            try:
                if not mmc_move_legal(state.num_nodes, state.edges,
                                      (move.u, move.v), self.strict_increase):
                    bad = "edge lowers the maximal cocktail count or is out of range"
            except (DuplicateEdge, SelfLoop) as exc:
                bad = str(exc)
        if bad is not None:
            outcome = GameOutcome.win(opponent)
            done = replace(state, phase=Phase.FINISHED, outcome=outcome,
                           turn_index=state.turn_index + 1)
            return done, Feedback.illegal(bad, outcome=outcome)
        key = (min(move.u, move.v), max(move.u, move.v))
        edges = tuple(sorted(state.edges + (key,)))
        new = replace(
            state,
            edges=edges,
            mis_count=cocktail_count(state.num_nodes, edges),
            active_player=opponent,
            turn_index=state.turn_index + 1,
        )
        if not self.legal_moves(new):
            outcome = GameOutcome.win(mover)
            new = replace(new, phase=Phase.FINISHED, outcome=outcome)
            return new, Feedback.legal(terminated=True, outcome=outcome)
        return new, Feedback.legal()

    def observe(self, state: MaxCocktailState, viewer: int) -> str:
        edges = " ".join(f"{u}-{v}" for u, v in state.edges) or "(none)"
        return (
            f"MaxMaximalCocktails nodes={state.num_nodes} "
            f"to_move=P{state.active_player + 1}\n"
            f"edges: {edges}\n"
            f"maximal cocktails: {state.mis_count}"
        )

    def payload(self, state: MaxCocktailState) -> dict[str, Any]:
        return {
            "num_nodes": state.num_nodes,
            "edges": [list(e) for e in state.edges],
            "mis_count": state.mis_count,
        }

    def move_to_text(self, move: Any) -> str:
        return f"edge {move.u} {move.v}"

    def parse_move(self, text: str) -> Any:
        m = re.fullmatch(r"edge\s+(\d+)\s+(\d+)", text.strip())
        if not m:
            raise MoveFormatError(f"bad edge move: {text!r}")
        return AddEdge(int(m.group(1)), int(m.group(2)))
