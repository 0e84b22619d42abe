"""Matroids, the Tutte polynomial and characters of the matroid Hopf algebra."""

from .matroid import (
    ElementKind,
    Matroid,
    MatroidError,
    SizeCapError,
    direct_sum,
    elements,
    empty,
    from_bases,
    graphic,
    to_mask,
    uniform,
)
from .poly import Poly
from .tutte import q_universal, recipe_closed_form, tutte_rank_sum

__version__ = "0.1.0"
