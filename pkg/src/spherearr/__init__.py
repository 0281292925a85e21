"""Exact combinatorics and homology of centrally symmetric hypersphere arrangements.

Faces and intersection posets, Salvetti complexes and their integral
homology, hemisphere decompositions, the word problem for the fundamental
groupoid and the antipodal (projective) quotient.  All arithmetic is exact.
"""

__version__ = "0.1.0"

from .arrangement import (
    Arrangement,
    Face,
    FacePoset,
    IntersectionPoset,
    enumerate_faces,
    faces_of,
    hemisphere_intersection_poset,
    intersection_poset,
    parse_arrangement,
    validate,
)
from .decomposition import decomposition_report, generic_equator, mobius_rank_formula
from .errors import BudgetError, ComputationError, InputError, SphereArrError
from .fixtures import fixture, fixture_names
from .homology import (
    CellPoset,
    HomologyResult,
    cellular_homology,
    order_complex_homology,
    relative_homology,
    union_subcomplex_homology,
)
from .projective import projective_words_equal, quotient_complex, quotient_homology
from .salvetti import SalComplex, build_salvetti, build_salvetti_affine
from .words import Groupoid, NormalForm, Word, abelianization_image, parse_word

__all__ = [
    "Arrangement",
    "BudgetError",
    "CellPoset",
    "ComputationError",
    "Face",
    "FacePoset",
    "Groupoid",
    "HomologyResult",
    "InputError",
    "IntersectionPoset",
    "NormalForm",
    "SalComplex",
    "SphereArrError",
    "Word",
    "abelianization_image",
    "build_salvetti",
    "build_salvetti_affine",
    "cellular_homology",
    "decomposition_report",
    "enumerate_faces",
    "faces_of",
    "fixture",
    "fixture_names",
    "generic_equator",
    "hemisphere_intersection_poset",
    "intersection_poset",
    "mobius_rank_formula",
    "order_complex_homology",
    "parse_arrangement",
    "parse_word",
    "projective_words_equal",
    "quotient_complex",
    "quotient_homology",
    "relative_homology",
    "union_subcomplex_homology",
    "validate",
]
