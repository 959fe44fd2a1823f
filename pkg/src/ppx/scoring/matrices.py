"""Pairwise win rates and termination-status breakdowns."""

from __future__ import annotations

from typing import Iterable, Mapping

from ..core.types import TerminationStatus
from .elo import MatchResult


def win_matrix(
    matches: Iterable[MatchResult],
) -> dict[str, dict[str, float]]:
    """entry[a][b] = wins of a over b / decisive games between them.

    Ties are ignored; pairs that never produced a decisive game carry no
    entry at all.
    """
    wins: dict[tuple[str, str], int] = {}
    names: set[str] = set()
    for m in matches:
        names.add(m.player_a)
        names.add(m.player_b)
        if m.score_a == 1.0:
            wins[(m.player_a, m.player_b)] = wins.get((m.player_a, m.player_b), 0) + 1
        elif m.score_a == 0.0:
            wins[(m.player_b, m.player_a)] = wins.get((m.player_b, m.player_a), 0) + 1
    out: dict[str, dict[str, float]] = {name: {} for name in sorted(names)}
    for a in names:
        for b in names:
            if a == b:
                continue
            w = wins.get((a, b), 0)
            l = wins.get((b, a), 0)
            if w + l:
                out[a][b] = w / (w + l)
    return out


def status_distribution(
    statuses_by_participant: Mapping[str, Iterable[TerminationStatus]],
) -> dict[str, dict[TerminationStatus, float]]:
    """Per-participant fractions over all six statuses (zeros included)."""
    out: dict[str, dict[TerminationStatus, float]] = {}
    for name, statuses in statuses_by_participant.items():
        tally = {status: 0 for status in TerminationStatus}
        total = 0
        for status in statuses:
            tally[status] += 1
            total += 1
        out[name] = {
            status: (tally[status] / total if total else 0.0)
            for status in TerminationStatus
        }
    return out
