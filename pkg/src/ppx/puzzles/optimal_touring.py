"""Plan a day of site visits on a Manhattan grid for maximum value.

Each site has a location (avenue, street), a required visit length in
minutes, a value, and an open window [begin_hour, end_hour].  The clock
starts at the earliest begin_hour; the first visit costs no travel.
Waiting for a site to open is allowed, and a visit only counts when the
whole desired duration fits inside the window.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Any, NamedTuple, Sequence

from ..core.rules import PuzzleRules, register
from ..core.types import (
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


class Site(NamedTuple):
    site_id: int
    avenue: int
    street: int
    desired_minutes: int
    value: int
    begin_hour: int
    end_hour: int


def tour_travel_minutes(a: Site, b: Site) -> int:
    """Manhattan distance: one minute per avenue or street block."""
    return abs(a.avenue - b.avenue) + abs(a.street - b.street)


def day_start_minutes(sites: Sequence[Site]) -> int:
    return min(s.begin_hour for s in sites) * 60


def _fit(site: Site, arrival: int) -> int | None:
    """Visit start minute if the whole visit fits the window, else None."""
    start = max(arrival, site.begin_hour * 60)
    if start + site.desired_minutes <= site.end_hour * 60:
        return start
    return None


def tour_score(sites: Sequence[Site], plan: Sequence[int]) -> int:
    """Value of a visit order.  Non-fitting visits are skipped outright:
    no travel is spent on them and they contribute nothing."""
    by_id = {s.site_id: s for s in sites}
    clock = day_start_minutes(sites)
    here: Site | None = None
    total = 0
    seen: set[int] = set()
    for sid in plan:
        site = by_id[sid]
        if sid in seen:
            continue
        arrival = clock if here is None else clock + tour_travel_minutes(here, site)
        start = _fit(site, arrival)
        if start is None:
            continue
        seen.add(sid)
        clock = start + site.desired_minutes
        here = site
        total += site.value
    return total


@dataclass(frozen=True)
class Visit:
    site_id: int


@dataclass(frozen=True)
class TourState(GameState):
    sites: tuple[Site, ...]
    itinerary: tuple[tuple[int, int], ...]  # (site_id, start_clock)
    clock: int
    position: int | None  # site_id currently at, None before the first visit
    collected: int


@register
class OptimalTouringRules(PuzzleRules):
    puzzle_id = PuzzleId.OPTIMAL_TOURING
    players = 1
    stochastic = False
    score_direction = ScoreDirection.HIGHER_BETTER

    def default_size_params(self, difficulty: Difficulty) -> dict[str, int]:
        return {"num_sites": 5 if difficulty is Difficulty.EASY else 10}

    def validate_template(self, template: PuzzleTemplate) -> None:
        super().validate_template(template)
        if not 1 <= template.size_params["num_sites"] <= 50:
            raise InvalidTemplate("num_sites must be in 1..50")

    def initial_state(self, template: PuzzleTemplate) -> TourState:
        rng = template.rng("gen")
        sites = []
        for sid in range(1, template.size_params["num_sites"] + 1):
            begin = rng.randint(5, 14)
            sites.append(
                Site(
                    site_id=sid,
                    avenue=rng.randint(0, 40),
                    street=rng.randint(0, 40),
                    desired_minutes=rng.randint(30, 120),
                    value=rng.randint(10, 200),
                    begin_hour=begin,
                    end_hour=min(23, begin + rng.randint(3, 8)),
                )
            )
        state = TourState(
            template=template,
            turn_index=0,
            active_player=0,
            phase=Phase.RUNNING,
            outcome=None,
            sites=tuple(sites),
            itinerary=(),
            clock=day_start_minutes(sites),
            position=None,
            collected=0,
        )
        return self._finish_if_stuck(state)

    def _finish_if_stuck(self, state: TourState) -> TourState:
        if state.phase is Phase.FINISHED or self.legal_moves(state):
            return state
        return replace(
            state, phase=Phase.FINISHED, outcome=GameOutcome.solo(state.collected)
        )

    def _site(self, state: TourState, site_id: int) -> Site | None:
        for s in state.sites:
            if s.site_id == site_id:
                return s
        return None

    def legal_moves(self, state: TourState) -> tuple[Any, ...]:
        if state.phase is Phase.FINISHED:
            return ()
        visited = {sid for sid, _ in state.itinerary}
        here = self._site(state, state.position) if state.position else None
        out = []
        for site in state.sites:
            if site.site_id in visited:
                continue
            arrival = state.clock if here is None else state.clock + tour_travel_minutes(here, site)
            if _fit(site, arrival) is not None:
                out.append(Visit(site.site_id))
        return tuple(out)

    def apply(self, state: TourState, move: Any) -> tuple[TourState, Feedback]:
        bad = None
        if not isinstance(move, Visit):
            bad = "unrecognised move variant"
        else:
            site = self._site(state, move.site_id)
            visited = {sid for sid, _ in state.itinerary}
            if site is None:
                bad = f"no site {move.site_id}"
            elif move.site_id in visited:
                bad = f"site {move.site_id} already visited"
        if bad is None:
            here = self._site(state, state.position) if state.position else None
            arrival = state.clock if here is None else state.clock + tour_travel_minutes(here, site)
            start = _fit(site, arrival)
            if start is None:
                bad = f"visit to site {site.site_id} cannot finish inside its window"
        if bad is not None:
            outcome = GameOutcome.solo(state.collected)
            done = replace(state, phase=Phase.FINISHED, outcome=outcome,
                           turn_index=state.turn_index + 1)
            return done, Feedback.illegal(bad, outcome=outcome)
        new = replace(
            state,
            itinerary=state.itinerary + ((site.site_id, start),),
            clock=start + site.desired_minutes,
            position=site.site_id,
            collected=state.collected + site.value,
            turn_index=state.turn_index + 1,
        )
        new = self._finish_if_stuck(new)
        fb = Feedback.legal(
            terminated=new.phase is Phase.FINISHED,
            outcome=new.outcome,
            revealed={"visit_started_at": start},
        )
        return new, fb

    def observe(self, state: TourState, viewer: int) -> str:
        lines = [
            f"OptimalTouring sites={len(state.sites)} clock={state.clock} "
            f"(day starts {day_start_minutes(state.sites)})",
            "site avenue street minutes value open close",
        ]
        for s in state.sites:
            lines.append(
                f"{s.site_id} {s.avenue} {s.street} {s.desired_minutes} "
                f"{s.value} {s.begin_hour} {s.end_hour}"
            )
        iti = " ".join(f"{sid}@{t}" for sid, t in state.itinerary) or "(empty)"
        lines.append(f"itinerary: {iti}")
        lines.append(f"value so far: {state.collected}")
        return "\n".join(lines)

    def payload(self, state: TourState) -> dict[str, Any]:
        return {
            "sites": [list(s) for s in state.sites],
            "itinerary": [list(x) for x in state.itinerary],
            "clock": state.clock,
            "position": state.position,
            "collected": state.collected,
        }

    def abort_score(self, state: TourState) -> float:
        return float(state.collected)

    def move_to_text(self, move: Any) -> str:
        return f"visit {move.site_id}"

    def parse_move(self, text: str) -> Any:
        m = re.fullmatch(r"visit\s+(\d+)", text.strip())
        if not m:
            raise MoveFormatError(f"bad touring move: {text!r}")
        return Visit(int(m.group(1)))
