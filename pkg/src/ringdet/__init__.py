"""Exact linear algebra over commutative rings: determinants, cofactors, adjoints."""

from .determinant import (
    DeterminantFunctional,
    UniquenessVerdict,
    adjoint,
    all_tuples,
    charpoly,
    check_uniqueness,
    cofactor,
    cofactor_matrix,
    det,
    det_rec,
    det_term,
    eval_tuple,
    expand_col,
    expand_row,
    sum_tuples,
)
from .matrix import DimensionError, Matrix, identity, minor, multiply, transpose
from .permutations import Permutation, compose, decompose, enumerate_perms, invert, parity
from .rings import Integers, IntegersMod, Polynomials, Rationals, Ring, RingError, make_ring
from .textio import ParseError, parse_matrix_file, parse_matrix_text, render_matrix

__version__ = "0.1.0"
