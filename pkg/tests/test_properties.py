"""Cross-puzzle invariants checked over random playouts."""

import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_template, random_record
from ppx.core import engine
from ppx.core.rules import all_puzzle_ids, rules_for
from ppx.core.types import Difficulty, Legality, Phase, PuzzleId
from ppx.rng import DeterministicRng
from ppx.scoring.elo import MatchResult, solo_to_matches
from ppx.scoring.matrices import win_matrix

ALL_PUZZLES = sorted(all_puzzle_ids(), key=lambda p: p.value)
DIFFICULTIES = (Difficulty.EASY, Difficulty.NORMAL)


def walk(template, max_steps=400):
    """Random playout yielding every (state, move, feedback) transition."""
    rules = rules_for(template.puzzle_id)
    rng = DeterministicRng(f"ppx/test/walk/{template.puzzle_id.value}/{template.seed}")
    state = engine.instantiate(template)
    for _ in range(max_steps):
        if state.phase is Phase.FINISHED:
            break
        move = rules.sample_move(state, rng)
        nxt, feedback = engine.step(state, move)
        yield state, move, feedback, nxt
        state = nxt


@pytest.mark.parametrize("puzzle_id", ALL_PUZZLES, ids=lambda p: p.value)
@pytest.mark.parametrize("difficulty", DIFFICULTIES, ids=lambda d: d.value)
def test_full_matches_are_template_deterministic(puzzle_id, difficulty):
    a = random_record(puzzle_id, difficulty, seed=6)
    b = random_record(puzzle_id, difficulty, seed=6)
    assert a == b  # wall time excluded from record equality
    assert a.raw_scores == b.raw_scores
    assert [s.digest for s in a.trajectory] == [s.digest for s in b.trajectory]


@pytest.mark.parametrize("puzzle_id", ALL_PUZZLES, ids=lambda p: p.value)
def test_states_are_immutable(puzzle_id):
    state = engine.instantiate(make_template(puzzle_id, Difficulty.EASY, seed=2))
    with pytest.raises(dataclasses.FrozenInstanceError):
        state.turn_index = 99


@pytest.mark.parametrize("puzzle_id", ALL_PUZZLES, ids=lambda p: p.value)
def test_stepping_never_mutates_the_input_state(puzzle_id):
    template = make_template(puzzle_id, Difficulty.EASY, seed=3)
    state = engine.instantiate(template)
    digest_before = engine.state_digest(state)
    rules = rules_for(puzzle_id)
    rng = DeterministicRng("ppx/test/nomut")
    engine.step(state, rules.sample_move(state, rng))
    assert engine.state_digest(state) == digest_before


@pytest.mark.parametrize("puzzle_id", ALL_PUZZLES, ids=lambda p: p.value)
def test_sampled_moves_stay_inside_the_enumerated_space(puzzle_id):
    template = make_template(puzzle_id, Difficulty.EASY, seed=4)
    rules = rules_for(puzzle_id)
    for state, move, _, _ in walk(template):
        if rules.legal_moves_exhaustive(state):
            assert move in engine.legal_moves(state)


@pytest.mark.parametrize("puzzle_id", ALL_PUZZLES, ids=lambda p: p.value)
def test_turns_advance_and_finish_only_once(puzzle_id):
    template = make_template(puzzle_id, Difficulty.EASY, seed=5)
    transitions = 0
    last_turn = 0
    for state, _, feedback, nxt in walk(template):
        assert nxt.turn_index == state.turn_index + 1
        assert nxt.turn_index > last_turn
        last_turn = nxt.turn_index
        if nxt.phase is Phase.FINISHED:
            transitions += 1
            assert feedback.terminated
            assert nxt.outcome is not None
            assert engine.legal_moves(nxt) == ()
    assert transitions <= 1


@pytest.mark.parametrize("puzzle_id", ALL_PUZZLES, ids=lambda p: p.value)
def test_observations_are_strings_for_every_seat(puzzle_id):
    template = make_template(puzzle_id, Difficulty.EASY, seed=6)
    rules = rules_for(puzzle_id)
    state = engine.instantiate(template)
    for viewer in range(rules.players):
        text = rules.observe(state, viewer)
        assert isinstance(text, str) and text


@pytest.mark.parametrize("puzzle_id", ALL_PUZZLES, ids=lambda p: p.value)
def test_move_grammar_roundtrips_over_a_playout(puzzle_id):
    template = make_template(puzzle_id, Difficulty.EASY, seed=7)
    rules = rules_for(puzzle_id)
    for _, move, _, _ in walk(template):
        assert rules.parse_move(rules.move_to_text(move)) == move


def test_hidden_probe_targets_never_appear_in_observations():
    state = engine.instantiate(
        make_template(PuzzleId.EXCLUSIVITY_PROBES, Difficulty.NORMAL, seed=8)
    )
    text = engine.observe(state, viewer=0)
    side = state.dimension
    for cell in sorted(state.hidden):
        bits = format(cell, f"0{side}b")
        coords = " ".join(bits)
        assert coords not in text


def test_hidden_bag_order_never_appears_in_observations():
    state = engine.instantiate(
        make_template(PuzzleId.MAX_TARGET, Difficulty.NORMAL, seed=9)
    )
    text = engine.observe(state, viewer=0)
    assert "perm" not in text
    assert "order hidden" in text


def test_hidden_ruby_split_never_appears_in_observations():
    state = engine.instantiate(
        make_template(PuzzleId.RUBY_RISKS, Difficulty.NORMAL, seed=10)
    )
    text = engine.observe(state, viewer=0)
    for value in state.contents:
        assert f"box holds {value}" not in text
    assert str(state.total_rubies) in text


def test_opposing_card_hand_shows_only_as_a_count():
    state = engine.instantiate(
        make_template(PuzzleId.BEAT_OR_BOMB, Difficulty.NORMAL, seed=11)
    )
    for viewer in (0, 1):
        text = engine.observe(state, viewer)
        own = " ".join(str(v) for v in state.hands[viewer])
        assert own in text
        assert f"opponent holds {len(state.hands[1 - viewer])} cards" in text


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.tuples(st.sampled_from(["a", "b", "c"]), st.sampled_from(["a", "b", "c"]),
                  st.sampled_from([0.0, 0.5, 1.0])),
        min_size=1,
        max_size=40,
    )
)
def test_win_matrix_pairs_sum_to_one(entries):
    log = [MatchResult(a, b, s) for a, b, s in entries if a != b]
    matrix = win_matrix(log)
    for a in matrix:
        for b, value in matrix[a].items():
            assert 0.0 <= value <= 1.0
            assert value + matrix[b][a] == pytest.approx(1.0)


@settings(max_examples=50, deadline=None)
@given(
    st.dictionaries(
        st.sampled_from(["p", "q", "r"]),
        st.dictionaries(st.integers(1, 5), st.floats(0.0, 1.0), min_size=1, max_size=5),
        min_size=2,
        max_size=3,
    ),
    st.randoms(use_true_random=False),
)
def test_solo_pairing_is_insensitive_to_dict_order(scores, shuffler):
    names = list(scores)
    shuffler.shuffle(names)
    reordered = {name: scores[name] for name in names}
    assert solo_to_matches(scores) == solo_to_matches(reordered)
