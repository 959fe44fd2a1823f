"""Score pipeline: normalization, Elo with CI, matrices, rendering."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ppx.core.types import ScoreDirection, TerminationStatus
from ppx.scoring.elo import (
    EmptyMatchLog,
    MatchResult,
    elo_expected,
    elo_update,
    sequential_ratings,
    solo_to_matches,
    tournament_elo,
)
from ppx.scoring.matrices import status_distribution, win_matrix
from ppx.scoring.normalize import BadRawScore, normalize_group
from ppx.scoring.tables import (
    csv_bytes,
    format_number,
    rating_rows,
    render_text_table,
    status_rows,
    win_matrix_rows,
)


def test_win_loss_scores_pass_through():
    raws = [1.0, 0.0, 0.5, 0.5]
    assert normalize_group(ScoreDirection.WIN_LOSS, raws) == (1.0, 0.0, 0.5, 0.5)


def test_win_loss_rejects_other_values():
    with pytest.raises(BadRawScore):
        normalize_group(ScoreDirection.WIN_LOSS, [0.7])


def test_higher_better_divides_by_the_max():
    assert normalize_group(ScoreDirection.HIGHER_BETTER, [10.0, 5.0]) == (1.0, 0.5)
    assert normalize_group(ScoreDirection.HIGHER_BETTER, [0.0, 4.0, 2.0]) == (
        0.0,
        1.0,
        0.5,
    )


def test_higher_better_all_zero_group_maps_to_zero():
    assert normalize_group(ScoreDirection.HIGHER_BETTER, [0.0, 0.0]) == (0.0, 0.0)


def test_lower_better_divides_the_min_by_each():
    assert normalize_group(ScoreDirection.LOWER_BETTER, [2.0, 4.0]) == (1.0, 0.5)
    assert normalize_group(ScoreDirection.LOWER_BETTER, [3.0, 3.0]) == (1.0, 1.0)


def test_lower_better_requires_positive_raws():
    with pytest.raises(BadRawScore):
        normalize_group(ScoreDirection.LOWER_BETTER, [0.0, 2.0])


def test_empty_and_non_finite_groups_are_rejected():
    with pytest.raises(BadRawScore):
        normalize_group(ScoreDirection.HIGHER_BETTER, [])
    with pytest.raises(BadRawScore):
        normalize_group(ScoreDirection.HIGHER_BETTER, [1.0, math.nan])
    with pytest.raises(BadRawScore):
        normalize_group(ScoreDirection.LOWER_BETTER, [1.0, math.inf])


@given(st.lists(st.floats(0.1, 1e6), min_size=1, max_size=8), st.floats(0.1, 100.0))
def test_normalization_is_scale_invariant(raws, factor):
    for direction in (ScoreDirection.HIGHER_BETTER, ScoreDirection.LOWER_BETTER):
        base = normalize_group(direction, raws)
        scaled = normalize_group(direction, [x * factor for x in raws])
        assert base == pytest.approx(scaled)
        assert all(0.0 <= v <= 1.0 for v in base)
        assert max(base) == pytest.approx(1.0)


def test_expected_score_anchors():
    assert elo_expected(1000.0, 1000.0) == 0.5
    assert elo_expected(1400.0, 1000.0) == pytest.approx(0.9090909, abs=1e-6)
    assert elo_expected(1000.0, 1200.0) == pytest.approx(0.2402530, abs=1e-6)


def test_update_moves_sixteen_points_on_an_even_upset():
    assert elo_update(1000.0, 1000.0, 1.0) == (1016.0, 984.0)


@given(
    st.floats(800.0, 1600.0),
    st.floats(800.0, 1600.0),
    st.sampled_from([0.0, 0.5, 1.0]),
)
def test_update_is_zero_sum(ra, rb, score):
    na, nb = elo_update(ra, rb, score)
    assert na + nb == pytest.approx(ra + rb)


def test_sequential_ratings_process_in_order():
    log = [MatchResult("a", "b", 1.0), MatchResult("a", "b", 1.0)]
    ratings = sequential_ratings(log)
    # second win moves less: a is already favoured
    assert ratings["a"] == pytest.approx(1016.0 + 32.0 * (1 - elo_expected(1016.0, 984.0)))
    assert ratings["a"] + ratings["b"] == pytest.approx(2000.0)


def test_solo_scores_become_pairwise_matches():
    scores = {
        "a": {1: 1.0, 2: 0.5},
        "b": {1: 0.4, 2: 0.5},
        "c": {1: 0.9, 2: 0.1},
    }
    matches = solo_to_matches(scores)
    # three pairs, two shared seeds each
    assert len(matches) == 6
    lookup = {(m.player_a, m.player_b): [] for m in matches}
    for m in matches:
        lookup[(m.player_a, m.player_b)].append(m.score_a)
    assert lookup[("a", "b")] == [1.0, 0.5]
    assert lookup[("a", "c")] == [1.0, 1.0]
    assert lookup[("b", "c")] == [0.0, 1.0]


def test_solo_pairing_ignores_unshared_seeds():
    scores = {"a": {1: 0.3, 7: 0.9}, "b": {1: 0.3}}
    matches = solo_to_matches(scores)
    assert matches == (MatchResult("a", "b", 0.5),)


def test_tournament_point_estimate_for_a_single_match():
    rows = tournament_elo([MatchResult("a", "b", 1.0)], resamples=50)
    by_name = {r.participant: r for r in rows}
    assert by_name["a"].rating == pytest.approx(1016.0)
    assert by_name["b"].rating == pytest.approx(984.0)
    assert rows[0].participant == "a"  # sorted best first
    assert by_name["a"].matches == by_name["b"].matches == 1


def test_all_tie_log_keeps_everyone_at_par_with_a_zero_width_band():
    log = [MatchResult("a", "b", 0.5)] * 10
    rows = tournament_elo(log, resamples=100)
    for row in rows:
        assert row.rating == pytest.approx(1000.0)
        assert row.ci_low == pytest.approx(1000.0)
        assert row.ci_high == pytest.approx(1000.0)


def test_confidence_band_brackets_the_point_estimate():
    log = [
        MatchResult("a", "b", 1.0),
        MatchResult("b", "c", 1.0),
        MatchResult("c", "a", 1.0),
        MatchResult("a", "b", 0.0),
        MatchResult("b", "c", 0.5),
    ] * 4
    rows = tournament_elo(log, ordering_seed=3, resamples=200)
    for row in rows:
        assert row.ci_low <= row.ci_high
        assert row.ci_low <= row.rating <= row.ci_high
        # b plays in four of the five matches per block, a and c in three
        assert row.matches == (16 if row.participant == "b" else 12)


def test_tournament_results_are_reproducible():
    log = [MatchResult("a", "b", 1.0), MatchResult("b", "a", 1.0)] * 5
    assert tournament_elo(log, ordering_seed=7) == tournament_elo(log, ordering_seed=7)


def test_empty_log_is_an_error():
    with pytest.raises(EmptyMatchLog):
        tournament_elo([])


def test_rows_sort_by_rating_then_name():
    log = [MatchResult("zeta", "alef", 0.5), MatchResult("mid", "alef", 0.5)]
    rows = tournament_elo(log, resamples=10)
    assert [r.participant for r in rows] == ["alef", "mid", "zeta"]


def test_win_matrix_ignores_ties():
    log = (
        [MatchResult("a", "b", 1.0)] * 2
        + [MatchResult("a", "b", 0.0)] * 5
        + [MatchResult("a", "b", 0.5)] * 3
    )
    matrix = win_matrix(log)
    assert abs(matrix["a"]["b"] - 2 / 7) <= 1e-6
    assert abs(matrix["b"]["a"] - 5 / 7) <= 1e-6
    assert matrix["a"]["b"] + matrix["b"]["a"] == pytest.approx(1.0)
    assert "a" not in matrix["a"]


def test_win_matrix_skips_pairs_without_decisive_games():
    log = [MatchResult("a", "b", 0.5), MatchResult("a", "c", 1.0)]
    matrix = win_matrix(log)
    assert "b" not in matrix["a"]
    assert matrix["a"]["c"] == 1.0
    assert set(matrix) == {"a", "b", "c"}


def test_status_distribution_is_zero_filled_and_sums_to_one():
    dist = status_distribution(
        {
            "good": [TerminationStatus.LEGAL] * 3,
            "flaky": [
                TerminationStatus.LEGAL,
                TerminationStatus.TIMEOUT,
                TerminationStatus.RUNTIME_ERROR,
                TerminationStatus.LEGAL,
            ],
            "idle": [],
        }
    )
    assert set(dist["good"]) == set(TerminationStatus)
    assert dist["good"][TerminationStatus.LEGAL] == 1.0
    assert dist["good"][TerminationStatus.TIMEOUT] == 0.0
    assert dist["flaky"][TerminationStatus.LEGAL] == 0.5
    assert dist["flaky"][TerminationStatus.TIMEOUT] == 0.25
    assert sum(dist["flaky"].values()) == pytest.approx(1.0)
    assert all(v == 0.0 for v in dist["idle"].values())


def test_text_table_alignment_and_rule():
    text = render_text_table(["name", "x"], [["alpha", "1.000"], ["b", "20.000"]])
    lines = text.splitlines()
    assert lines[0].startswith("name")
    assert set(lines[1]) <= {"-", " "}
    assert lines[2].startswith("alpha")
    assert text.endswith("\n")


def test_csv_bytes_are_deterministic():
    out = csv_bytes(["a", "b"], [["1", "2"], ["3", "4"]])
    assert out == "a,b\n1,2\n3,4\n"


def test_rating_rows_format():
    rows = tournament_elo([MatchResult("a", "b", 1.0)], resamples=10)
    headers, body = rating_rows(rows)
    assert headers == ["participant", "rating", "ci_low", "ci_high", "matches"]
    assert body[0][0] == "a"
    assert body[0][1] == "1016.000"
    assert body[0][4] == "1"


def test_win_matrix_rows_mark_self_and_missing_pairs():
    matrix = win_matrix([MatchResult("a", "b", 0.5), MatchResult("a", "c", 1.0)])
    headers, body = win_matrix_rows(matrix)
    assert headers == ["participant", "a", "b", "c"]
    row_a = body[0]
    assert row_a == ["a", "-", "", "1.000"]


def test_status_rows_cover_all_six_columns():
    dist = status_distribution({"p": [TerminationStatus.LEGAL]})
    headers, body = status_rows(dist)
    assert headers == [
        "participant",
        "Legal",
        "NotFollowInstruction",
        "Timeout",
        "RuleViolation",
        "RuntimeError",
        "SyntaxError",
    ]
    assert body[0][0] == "p"
    assert body[0][1] == "1.000"


def test_format_number_is_three_decimals():
    assert format_number(2 / 7) == "0.286"
    assert format_number(1000.0) == "1000.000"
