"""Exact symbolic engine for the quantum groups O(SL_q(N)) and O(SU_q(N)).

Scalars live in Q(q); elements are kept in a PBW-type normal form with
the quantum determinant reduced to 1.  The Haar state is obtained by
solving the invariance equations exactly, degree by degree.
"""

from .algebra import (
    AlgElement,
    generator,
    generators,
    monomial_element,
    multiply,
    quantum_determinant,
    quantum_minor,
)
from .expr import ParseError, format_element, parse, parse_element, parse_scalar
from .grading import BiDegree, bidegree, decompose, is_bi_invariant, project_00
from .haar import (
    HaarCache,
    fundamental_norm_L,
    fundamental_norm_R,
    haar,
    haar_zeta_closed,
    inner_L,
    inner_R,
    ks_projection_expansion,
    zeta,
)
from .hopf import TensorElement, antipode, coproduct, counit, star, tensor, theta
from .qcoeff import ONE, Q, ZERO, LaurentPoly, QScalar, qbinom, qint, qpow

__version__ = "0.1.0"

__all__ = [
    "AlgElement", "generator", "generators", "monomial_element", "multiply",
    "quantum_determinant", "quantum_minor",
    "ParseError", "format_element", "parse", "parse_element", "parse_scalar",
    "BiDegree", "bidegree", "decompose", "is_bi_invariant", "project_00",
    "HaarCache", "fundamental_norm_L", "fundamental_norm_R", "haar", "haar_zeta_closed",
    "inner_L", "inner_R", "ks_projection_expansion", "zeta",
    "TensorElement", "antipode", "coproduct", "counit", "star", "tensor", "theta",
    "ONE", "Q", "ZERO", "LaurentPoly", "QScalar", "qbinom", "qint", "qpow",
]
