"""Combinatorial rank invariants of GKZ hypergeometric systems.

Exact (integer/rational) computations with pointed affine semigroups:
normal forms and cones, membership and localized membership, graded local
cohomology via degreewise Cech complexes, Markov bases, and the Euler-Koszul
rank tables built on top of them.  Pure standard library.
"""

from .intlin import IntMatrix, hermite_form, kernel_lattice, smith_form, validate_matrix

__all__ = [
    "IntMatrix",
    "hermite_form",
    "smith_form",
    "kernel_lattice",
    "validate_matrix",
]

__version__ = "0.1.0"
