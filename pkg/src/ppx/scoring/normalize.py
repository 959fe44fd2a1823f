"""Raw-to-normalized score mapping within one comparison group.

A group is every participant's raw score on the same template (same
puzzle, difficulty, and seed).  Two-player results already live in
[0, 1] and pass through unchanged.
"""

from __future__ import annotations

import math
from typing import Sequence

from ..core.types import PpxError, ScoreDirection


class BadRawScore(PpxError):
    pass


def normalize_group(
    direction: ScoreDirection, raws: Sequence[float]
) -> tuple[float, ...]:
    if not raws:
        raise BadRawScore("empty group")
    for x in raws:
        if not math.isfinite(x):
            raise BadRawScore(f"non-finite raw score {x!r}")
    if direction is ScoreDirection.WIN_LOSS:
        for x in raws:
            if x not in (0.0, 0.5, 1.0):
                raise BadRawScore(f"two-player raw score {x!r} outside {{0, 0.5, 1}}")
        return tuple(float(x) for x in raws)
    if direction is ScoreDirection.LOWER_BETTER:
        if any(x <= 0 for x in raws):
            raise BadRawScore("lower-is-better raw scores must be positive")
        best = min(raws)
        return tuple(best / x for x in raws)
    top = max(raws)
    if top <= 0:
        # nobody scored anything; by convention everyone gets zero
        return tuple(0.0 for _ in raws)
    return tuple(x / top for x in raws)
