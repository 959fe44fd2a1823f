"""Simulated annealing over visit orders for the touring puzzle."""

from __future__ import annotations

import math
from typing import Any, Sequence

from ..puzzles.optimal_touring import (
    Site,
    TourState,
    Visit,
    _fit,
    tour_score,
    tour_travel_minutes,
)
from ..rng import DeterministicRng
from .base import Agent


def _neighbor(order: list[int], rng: DeterministicRng) -> list[int]:
    n = len(order)
    out = list(order)
    if n < 2:
        return out
    op = rng.randrange(3)
    i = rng.randrange(n)
    j = rng.randrange(n)
    if i == j:
        j = (j + 1) % n
    i, j = min(i, j), max(i, j)
    if op == 0:
        out[i], out[j] = out[j], out[i]
    elif op == 1:
        out.insert(j, out.pop(i))
    else:
        out[i : j + 1] = reversed(out[i : j + 1])
    return out


def anneal_tour(
    sites: Sequence[Site],
    rng: DeterministicRng,
    iterations: int = 20000,
) -> tuple[int, ...]:
    """Best visit order found for the skip-aware plan score."""
    mean_value = sum(s.value for s in sites) / max(len(sites), 1)
    # start from value density so short high-value stops go early
    order = [
        s.site_id
        for s in sorted(sites, key=lambda s: (-s.value / s.desired_minutes, s.site_id))
    ]
    current = order
    current_score = tour_score(sites, current)
    best, best_score = list(current), current_score
    temperature = 10.0 * max(mean_value, 1.0)
    for _ in range(iterations):
        candidate = _neighbor(current, rng)
        score = tour_score(sites, candidate)
        delta = score - current_score
        if delta >= 0 or rng.random() < math.exp(delta / max(temperature, 1e-9)):
            current, current_score = candidate, score
            if score > best_score:
                best, best_score = list(candidate), score
        temperature *= 0.995
    return tuple(best)


class TouringAnnealAgent(Agent):
    """Anneal a full itinerary once, then walk it, skipping stops that
    no longer fit their windows."""

    name = "sa"

    def __init__(self, iterations: int = 20000) -> None:
        super().__init__()
        self.iterations = iterations
        self._plan: tuple[int, ...] | None = None

    def start(self, template, player: int) -> None:
        super().start(template, player)
        self._plan = None

    def decide(self, state: TourState, player: int) -> Any:
        if self._plan is None:
            self._plan = anneal_tour(state.sites, self.rng, self.iterations)
        by_id = {s.site_id: s for s in state.sites}
        visited = {sid for sid, _ in state.itinerary}
        here = by_id.get(state.position) if state.position is not None else None
        fallback = None
        for sid in self._plan:
            if sid in visited:
                continue
            if fallback is None:
                fallback = sid
            site = by_id[sid]
            arrival = state.clock
            if here is not None:
                arrival += tour_travel_minutes(here, site)
            if _fit(site, arrival) is not None:
                return Visit(sid)
        return Visit(fallback if fallback is not None else state.sites[0].site_id)
