"""Hidden-box requesting game: compositions, resolution, posterior."""

from collections import Counter
from itertools import product

import pytest
from scipy import stats

from conftest import make_template, play_builtin
from ppx.core import engine
from ppx.core.types import Difficulty, Legality, Phase, PuzzleId
from ppx.puzzles.ruby_risks import (
    Request,
    consistent_compositions,
    ruby_resolve,
    uniform_composition,
)
from ppx.rng import DeterministicRng
from ppx.strategies.base import RandomAgent


def all_compositions(total: int, parts: int):
    if parts == 1:
        return [(total,)]
    out = []
    for head in range(total + 1):
        out.extend((head,) + rest for rest in all_compositions(total - head, parts - 1))
    return out


def test_resolution_grants_affordable_requests_only():
    assert ruby_resolve(10, 10) == 10
    assert ruby_resolve(9, 8) == 8
    assert ruby_resolve(10, 12) == 0
    assert ruby_resolve(5, 0) == 0


def test_walkthrough_collects_eighteen():
    # boxes 11/9/10: ask 10 (granted), 8 (granted), 12 (bounced) -> 18
    gains = [ruby_resolve(c, r) for c, r in ((11, 10), (9, 8), (10, 12))]
    assert gains == [10, 8, 0]
    assert sum(gains) == 18


def test_uniform_composition_sums_and_bounds():
    rng = DeterministicRng("ppx/test/compositions")
    for _ in range(200):
        total = rng.randint(0, 30)
        parts = rng.randint(1, 5)
        comp = uniform_composition(total, parts, rng)
        assert len(comp) == parts
        assert sum(comp) == total
        assert all(c >= 0 for c in comp)


def test_uniform_composition_is_actually_uniform():
    rng = DeterministicRng("ppx/test/composition-freq")
    support = all_compositions(6, 3)  # 28 equally likely outcomes
    counts = Counter(uniform_composition(6, 3, rng) for _ in range(28 * 300))
    assert set(counts) == set(support)
    _, p = stats.chisquare(list(counts.values()))
    assert p > 1e-3


def test_consistent_compositions_filter_by_history():
    # first box granted a request of 3: content >= 3 there
    worlds = consistent_compositions(6, 3, [(3, 3)])
    assert worlds
    assert all(w[0] >= 3 and sum(w) == 6 for w in worlds)
    # first box bounced a request of 3: content < 3
    bounced = consistent_compositions(6, 3, [(3, 0)])
    assert all(w[0] < 3 for w in bounced)
    # together they partition the 28 compositions
    assert len(worlds) + len(bounced) == len(all_compositions(6, 3))


def test_zero_request_is_always_granted_and_consistent():
    worlds = consistent_compositions(5, 2, [(0, 0)])
    assert len(worlds) == len(all_compositions(5, 2))


def test_generator_totals_match_difficulty():
    easy = engine.instantiate(make_template(PuzzleId.RUBY_RISKS, Difficulty.EASY, seed=4))
    normal = engine.instantiate(make_template(PuzzleId.RUBY_RISKS, Difficulty.NORMAL, seed=4))
    assert easy.num_boxes == 3 and sum(easy.contents) == 30
    assert normal.num_boxes == 5 and sum(normal.contents) == 50


def test_engine_walk_accumulates_gains():
    template = make_template(PuzzleId.RUBY_RISKS, Difficulty.EASY, seed=7)
    state = engine.instantiate(template)
    contents = state.contents
    total = 0
    for i in range(3):
        ask = contents[i]  # omniscient play: request exactly the content
        state, feedback = engine.step(state, Request(ask))
        total += ask
        assert feedback.revealed == (("gain", ask),)
    assert state.phase is Phase.FINISHED
    assert feedback.outcome.solo_score == total == 30


def test_over_cap_request_ends_run_keeping_collected():
    template = make_template(PuzzleId.RUBY_RISKS, Difficulty.EASY, seed=7)
    state = engine.instantiate(template)
    state, _ = engine.step(state, Request(state.contents[0]))
    collected = state.collected
    cap = state.total_rubies - collected
    state, feedback = engine.step(state, Request(cap + 1))
    assert feedback.legality is Legality.ILLEGAL
    assert state.phase is Phase.FINISHED
    assert feedback.outcome.solo_score == collected


def test_legal_requests_span_zero_to_cap():
    template = make_template(PuzzleId.RUBY_RISKS, Difficulty.EASY, seed=9)
    state = engine.instantiate(template)
    moves = engine.legal_moves(state)
    amounts = sorted(m.amount for m in moves)
    assert amounts == list(range(state.total_rubies + 1))


def test_move_text_roundtrip():
    from ppx.core.rules import rules_for

    rules = rules_for(PuzzleId.RUBY_RISKS)
    assert rules.parse_move(rules.move_to_text(Request(12))) == Request(12)


def test_random_runs_never_exceed_the_total():
    for seed in range(1, 20):
        template = make_template(PuzzleId.RUBY_RISKS, Difficulty.EASY, seed=seed)
        record = play_builtin(template, [RandomAgent()])
        assert 0 <= record.raw_scores[0] <= 30
