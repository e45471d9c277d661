# cw/__init__.py
"""Low-dimensional CW complexes, cellular maps and the builders for every complex used."""

from .builders import (
    check_pair,
    check_space,
    circle,
    circle_doubling,
    collapse_points,
    figure8_cover_pair,
    folded,
    gamma_pd,
    gamma_tm,
    gamma_tm_prime,
    points,
    torus,
    torus_doubling,
)
from .complex import (
    CellularMap,
    CWComplex,
    CWPair,
    Edge,
    Face,
    cochain_complex,
    disjoint_union,
    fold_map,
    induced_cochain_map,
    union_of_maps,
)
from .dot import to_dot, write_dot

__all__ = [
    "CWComplex", "CellularMap", "CWPair", "Edge", "Face",
    "cochain_complex", "induced_cochain_map", "disjoint_union", "fold_map", "union_of_maps",
    "circle", "circle_doubling", "points", "collapse_points", "torus", "torus_doubling",
    "figure8_cover_pair", "gamma_pd", "gamma_tm", "gamma_tm_prime", "folded",
    "check_space", "check_pair",
    "to_dot", "write_dot",
]
