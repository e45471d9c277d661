# tiling1d/__init__.py
"""One-dimensional substitutions, their Barge-Diamond approximants and factor maps."""

from .bd import BDComplex, bd_complex
from .factor import circle_factor, factor_pair, tiling_cohomology
from .substitution import (
    LetterMap,
    Substitution1D,
    period_doubling,
    render_word,
    solenoid,
    thue_morse,
    tokenize,
)

__all__ = [
    "Substitution1D", "LetterMap", "tokenize", "render_word",
    "period_doubling", "thue_morse", "solenoid",
    "BDComplex", "bd_complex",
    "factor_pair", "circle_factor", "tiling_cohomology",
]
