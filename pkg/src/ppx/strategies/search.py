"""Two-ply search with a connection-distance evaluation for the
claim-the-grid duel."""

from __future__ import annotations

from collections import deque
from typing import Any

from ..puzzles.superply import (
    Board,
    Claim,
    SuperplyState,
    superply_has_path,
    superply_hint_cells,
)
from .base import Agent

_STEPS = tuple(
    (dr, dc) for dr in (-1, 0, 1) for dc in (-1, 0, 1) if (dr, dc) != (0, 0)
)


def path_cost(board: Board, mark: int) -> int:
    """Fewest empty cells the player still needs to finish a crossing.

    Own cells cost nothing, empty cells cost one, opponent cells block.
    Mark 1 crosses left to right, mark 2 top to bottom.  Boards with no
    open crossing cost one more than the whole board.
    """
    side = len(board)
    blocked = 3 - mark
    inf = side * side + 1

    def enter(r: int, c: int) -> int | None:
        cell = board[r][c]
        if cell == blocked:
            return None
        return 0 if cell == mark else 1

    dist = [[inf] * side for _ in range(side)]
    queue: deque[tuple[int, int]] = deque()
    starts = (
        [(r, 0) for r in range(side)] if mark == 1 else [(0, c) for c in range(side)]
    )
    for r, c in starts:
        cost = enter(r, c)
        if cost is not None and cost < dist[r][c]:
            dist[r][c] = cost
            if cost == 0:
                queue.appendleft((r, c))
            else:
                queue.append((r, c))
    while queue:
        r, c = queue.popleft()
        for dr, dc in _STEPS:
            nr, nc = r + dr, c + dc
            if not (0 <= nr < side and 0 <= nc < side):
                continue
            cost = enter(nr, nc)
            if cost is None:
                continue
            nd = dist[r][c] + cost
            if nd < dist[nr][nc]:
                dist[nr][nc] = nd
                if cost == 0:
                    queue.appendleft((nr, nc))
                else:
                    queue.append((nr, nc))
    goals = (
        [(r, side - 1) for r in range(side)]
        if mark == 1
        else [(side - 1, c) for c in range(side)]
    )
    return min(dist[r][c] for r, c in goals)


def _with(board: Board, row: int, col: int, mark: int) -> Board:
    line = board[row - 1][: col - 1] + (mark,) + board[row - 1][col:]
    return board[: row - 1] + (line,) + board[row:]


class SuperplySearchAgent(Agent):
    """Take wins on the spot, otherwise pick the hinted cell whose worst
    opponent reply leaves our crossing cheapest relative to theirs."""

    name = "search"

    def decide(self, state: SuperplyState, player: int) -> Any:
        board = state.board
        side = len(board)
        mine = player + 1
        theirs = 3 - mine
        big = side * side + 10
        options = superply_hint_cells(board, state.hint)
        if not options:
            empties = [
                (r, c)
                for r in range(1, side + 1)
                for c in range(1, side + 1)
                if board[r - 1][c - 1] == 0
            ]
            target = empties[0] if empties else (1, 1)
            return Claim(*target)

        best_key = None
        pick = options[0]
        for r, c in options:
            after = _with(board, r, c, mine)
            if superply_has_path(after, mine):
                return Claim(r, c)
            worst = big
            replies = [
                (rr, cc)
                for rr in range(1, side + 1)
                for cc in range(1, side + 1)
                if after[rr - 1][cc - 1] == 0
            ]
            if not replies:
                worst = 0  # full board without a crossing ends level
            for rr, cc in replies:
                reply_board = _with(after, rr, cc, theirs)
                if superply_has_path(reply_board, theirs):
                    value = -big
                else:
                    value = path_cost(reply_board, theirs) - path_cost(
                        reply_board, mine
                    )
                worst = min(worst, value)
                if worst == -big:
                    break
            key = (-worst, r, c)
            if best_key is None or key < best_key:
                best_key = key
                pick = (r, c)
        return Claim(*pick)
