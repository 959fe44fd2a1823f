"""Elo ratings over a match log, with order-reshuffle confidence bands.

Ratings start at 1000 and move by K = 32 per match.  Because sequential
Elo depends on processing order, the 95% band comes from re-running the
update sequence under many reshuffles of the same log and taking
percentiles of the final ratings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ..core.types import PpxError
from ..rng import DeterministicRng

INITIAL_RATING = 1000.0
K_FACTOR = 32.0


class EmptyMatchLog(PpxError):
    pass


@dataclass(frozen=True)
class MatchResult:
    """One pairwise comparison: score_a is 1, 0.5, or 0."""

    player_a: str
    player_b: str
    score_a: float


def elo_expected(rating_a: float, rating_b: float) -> float:
    return 1.0 / (1.0 + 10.0 ** ((rating_b - rating_a) / 400.0))


def elo_update(
    rating_a: float, rating_b: float, score_a: float, k: float = K_FACTOR
) -> tuple[float, float]:
    expected = elo_expected(rating_a, rating_b)
    delta = k * (score_a - expected)
    return rating_a + delta, rating_b - delta


def sequential_ratings(
    matches: Sequence[MatchResult],
    initial: float = INITIAL_RATING,
    k: float = K_FACTOR,
) -> dict[str, float]:
    ratings: dict[str, float] = {}
    for m in matches:
        ra = ratings.setdefault(m.player_a, initial)
        rb = ratings.setdefault(m.player_b, initial)
        ratings[m.player_a], ratings[m.player_b] = elo_update(ra, rb, m.score_a, k)
    return ratings


def solo_to_matches(
    scores: Mapping[str, Mapping[object, float]]
) -> tuple[MatchResult, ...]:
    """Pairwise results from per-seed normalized solo scores.

    ``scores[participant][seed_key]`` must use the same seed keys across
    participants; every unordered pair meets once per shared key.
    """
    names = sorted(scores)
    out: list[MatchResult] = []
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            shared = sorted(
                set(scores[a]) & set(scores[b]), key=lambda key: str(key)
            )
            for key in shared:
                sa, sb = scores[a][key], scores[b][key]
                if sa > sb:
                    out.append(MatchResult(a, b, 1.0))
                elif sa < sb:
                    out.append(MatchResult(a, b, 0.0))
                else:
                    out.append(MatchResult(a, b, 0.5))
    return tuple(out)


@dataclass(frozen=True)
class RatingRow:
    participant: str
    rating: float
    ci_low: float
    ci_high: float
    matches: int


def tournament_elo(
    matches: Iterable[MatchResult],
    ordering_seed: int = 0,
    resamples: int = 1000,
    initial: float = INITIAL_RATING,
    k: float = K_FACTOR,
) -> tuple[RatingRow, ...]:
    """Point ratings under one seeded shuffle, 95% CI over reshuffles."""
    log = list(matches)
    if not log:
        raise EmptyMatchLog("cannot rate an empty match log")
    rng = DeterministicRng(f"ppx/elo/{ordering_seed}")
    order = list(log)
    rng.shuffle(order)
    point = sequential_ratings(order, initial, k)

    counts: dict[str, int] = {}
    for m in log:
        counts[m.player_a] = counts.get(m.player_a, 0) + 1
        counts[m.player_b] = counts.get(m.player_b, 0) + 1

    draws: dict[str, list[float]] = {name: [] for name in point}
    for _ in range(resamples):
        sample = list(log)
        rng.shuffle(sample)
        final = sequential_ratings(sample, initial, k)
        for name, rating in final.items():
            draws[name].append(rating)

    rows = []
    for name in sorted(point, key=lambda n: (-point[n], n)):
        if draws[name]:
            lo, hi = _percentile(draws[name], 0.025), _percentile(draws[name], 0.975)
        else:
            lo = hi = point[name]
        rows.append(RatingRow(name, point[name], lo, hi, counts[name]))
    return tuple(rows)


def _percentile(values: Sequence[float], q: float) -> float:
    ordered = sorted(values)
    if len(ordered) == 1:
        return ordered[0]
    pos = q * (len(ordered) - 1)
    lo = int(pos)
    hi = min(lo + 1, len(ordered) - 1)
    frac = pos - lo
    return ordered[lo] * (1 - frac) + ordered[hi] * frac
