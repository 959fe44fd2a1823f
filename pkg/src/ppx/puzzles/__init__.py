"""Puzzle rulesets.  Importing this package fills the engine registry."""

from . import (  # noqa: F401
    beat_or_bomb,
    card_nim,
    cocktails,
    max_cocktails,
    optimal_touring,
    particles,
    probes,
    ruby_risks,
    sudokill,
    superply,
    targets,
    tidy_tower,
)
