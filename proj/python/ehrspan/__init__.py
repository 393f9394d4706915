"""Exact lattice-polytope invariants and weighted point-set Hilbert functions.

Everything lives in the compiled extension; this package only re-exports it.
Reports are plain dicts/lists mirroring the CLI JSON schema.
"""

from ehrspan._core import (
    PointSet,
    Polytope,
    __version__,
    check,
    coarsen,
    cube,
    dilate,
    ehrhart_counts,
    ehrhart_polynomial,
    hstar,
    idp,
    join,
    pyramid,
    random_corpus,
    random_point_set,
    reeve_bipyramid,
    reeve_simplex,
    segment,
    spanning,
    unimodular_simplex,
)

__all__ = [
    "PointSet",
    "Polytope",
    "__version__",
    "check",
    "coarsen",
    "cube",
    "dilate",
    "ehrhart_counts",
    "ehrhart_polynomial",
    "hstar",
    "idp",
    "join",
    "pyramid",
    "random_corpus",
    "random_point_set",
    "reeve_bipyramid",
    "reeve_simplex",
    "segment",
    "spanning",
    "unimodular_simplex",
]
