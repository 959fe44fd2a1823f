from .elo import (
    INITIAL_RATING,
    K_FACTOR,
    EmptyMatchLog,
    MatchResult,
    RatingRow,
    elo_expected,
    elo_update,
    sequential_ratings,
    solo_to_matches,
    tournament_elo,
)
from .matrices import status_distribution, win_matrix
from .normalize import BadRawScore, normalize_group
from .tables import (
    csv_bytes,
    format_number,
    rating_rows,
    render_text_table,
    status_rows,
    win_matrix_rows,
)

__all__ = [
    "BadRawScore",
    "EmptyMatchLog",
    "INITIAL_RATING",
    "K_FACTOR",
    "MatchResult",
    "RatingRow",
    "csv_bytes",
    "elo_expected",
    "elo_update",
    "format_number",
    "normalize_group",
    "rating_rows",
    "render_text_table",
    "sequential_ratings",
    "solo_to_matches",
    "status_distribution",
    "status_rows",
    "tournament_elo",
    "win_matrix",
    "win_matrix_rows",
]
