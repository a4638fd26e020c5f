"""Exact computation in the iterated-Laurent division algebras Delta(k; n_1, ..., n_r).

Coefficients live in Q(zeta_m); generators x_i, y_i satisfy
x_i y_i = zeta_{n_i} y_i x_i and otherwise commute.
"""

from .cyclo import CycNum, cyclotomic_poly, primitive_root
from .errors import NcprodError
from .expr import format_element, parse, parse_element
from .lattice import (
    AbelianGroupType,
    IntegerLattice,
    commutator_pairing,
    is_central_monomial,
    quotient_image,
    quotient_type,
    smith_normal_form,
)
from .obstruct import Verdict, obstruction
from .twisted import AlgebraConfig, Mode, TwistedElement, cocycle, reduce_word
from .valtheory import inv, leading_split, nth_root, residue, rtl_lex_compare, val

__version__ = "0.1.0"
