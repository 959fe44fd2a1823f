"""Hidden-particle probing: configurations, stop rule, scoring, greedy."""

import dataclasses

import pytest

from conftest import make_template, play_builtin
from ppx.core import engine
from ppx.core.rules import rules_for
from ppx.core.types import Difficulty, GameUnfinished, Phase, PuzzleId
from ppx.puzzles.particles import vector_to_cell
from ppx.puzzles.probes import (
    Probe,
    probes_answer,
    probes_score,
    valid_configurations,
)
from ppx.strategies.base import RandomAgent
from ppx.strategies.greedy import ProbesGreedyAgent


def test_valid_configurations_enforce_pairwise_distance():
    cfgs = valid_configurations(2, 1, 2)
    assert len(cfgs) == 6  # any 2 of 4 cells
    spaced = valid_configurations(2, 2, 2)
    assert set(spaced) == {frozenset({0b00, 0b11}), frozenset({0b01, 0b10})}


def test_generator_hides_an_admissible_configuration():
    for seed in range(1, 20):
        state = engine.instantiate(
            make_template(PuzzleId.EXCLUSIVITY_PROBES, Difficulty.NORMAL, seed=seed)
        )
        assert state.hidden in valid_configurations(
            state.dimension, state.min_distance, state.num_particles
        )


def test_answers_reflect_membership():
    hidden = frozenset({0b00, 0b11})
    assert probes_answer(hidden, 0b00)
    assert not probes_answer(hidden, 0b01)


def test_match_ends_when_every_particle_has_a_yes():
    template = make_template(PuzzleId.EXCLUSIVITY_PROBES, Difficulty.EASY, seed=2)
    state = engine.instantiate(template)
    targets = sorted(state.hidden)
    for i, cell in enumerate(targets):
        assert state.phase is Phase.RUNNING
        vec = tuple((cell >> (state.dimension - 1 - j)) & 1 for j in range(state.dimension))
        state, feedback = engine.step(state, Probe(vec))
        assert feedback.revealed == (("answer", "yes"),)
    assert state.phase is Phase.FINISHED
    assert feedback.outcome.solo_score == len(targets)
    assert probes_score(state) == len(targets)


def test_score_undefined_while_running():
    state = engine.instantiate(make_template(PuzzleId.EXCLUSIVITY_PROBES, Difficulty.EASY, seed=2))
    with pytest.raises(GameUnfinished):
        probes_score(state)


def test_no_answers_reveal_no():
    template = make_template(PuzzleId.EXCLUSIVITY_PROBES, Difficulty.EASY, seed=2)
    state = engine.instantiate(template)
    miss = next(c for c in range(8) if c not in state.hidden)
    vec = tuple((miss >> (2 - j)) & 1 for j in range(3))
    state, feedback = engine.step(state, Probe(vec))
    assert feedback.revealed == (("answer", "no"),)
    assert state.phase is Phase.RUNNING


def test_probe_count_is_the_raw_score_lower_is_better():
    from ppx.core.types import ScoreDirection

    rules = rules_for(PuzzleId.EXCLUSIVITY_PROBES)
    assert rules.score_direction is ScoreDirection.LOWER_BETTER


def test_restricted_family_needs_one_more_probe_after_a_yes():
    # with hypotheses {00,11} vs {01,10}, a yes at 00 pins the pair
    template = make_template(
        PuzzleId.EXCLUSIVITY_PROBES,
        Difficulty.EASY,
        seed=1,
        dimension=2,
        min_distance=2,
        num_particles=2,
    )
    base = engine.instantiate(template)
    state = dataclasses.replace(base, hidden=frozenset({0b00, 0b11}))
    family = [(0b00, 0b11), (0b01, 0b10)]
    agent = ProbesGreedyAgent(family=[tuple(f) for f in family])
    agent.start(template, 0)

    first = agent.decide(state, 0)
    assert first == Probe((0, 0))
    state, feedback = engine.step(state, first)
    assert feedback.revealed == (("answer", "yes"),)

    second = agent.decide(state, 0)
    assert second == Probe((1, 1))
    state, feedback = engine.step(state, second)
    assert state.phase is Phase.FINISHED
    assert feedback.outcome.solo_score == 2


def test_greedy_beats_random_on_average():
    greedy_total = random_total = 0
    for seed in range(1, 31):
        template = make_template(PuzzleId.EXCLUSIVITY_PROBES, Difficulty.EASY, seed=seed)
        greedy_total += play_builtin(template, [ProbesGreedyAgent()]).raw_scores[0]
        random_total += play_builtin(template, [RandomAgent()]).raw_scores[0]
    assert greedy_total < random_total


def test_move_text_roundtrip():
    rules = rules_for(PuzzleId.EXCLUSIVITY_PROBES)
    move = Probe((0, 1, 1, 0))
    assert rules.parse_move(rules.move_to_text(move)) == move
