"""Exact-arithmetic certification toolkit for affine superalgebra identities.

Subpackages cover the structure-constant layer (liesuper), the vacuum-module
mode calculus (affine), free-field currents (freefield), polynomial reduction
(zhu), orbit and sheet geometry (geometry), weight-lattice arithmetic
(lattice), text grammars (parsing) and the suite runner (report).
"""

__all__ = [
    "affine",
    "cli",
    "freefield",
    "geometry",
    "lattice",
    "liesuper",
    "parsing",
    "ratmat",
    "report",
    "zhu",
]

__version__ = "1.0.0"
