"""Exact arithmetic foundation: Q(sqrt(d)) scalars, polynomials, reduced
rational functions, pole analysis, and Laurent heads."""

from ljgalois.exactalg.field import (
    FieldElem,
    Rat,
    fe,
    rational_sqrt,
    sqrt_elem,
    squarefree_decompose,
)
from ljgalois.exactalg.poly import Poly, poly_sqrt
from ljgalois.exactalg.ratfunc import (
    INFINITY,
    LaurentHead,
    PoleData,
    RatFunc,
    coeff_at_infinity,
    head_as_ratfunc,
    laurent_at_infinity,
    laurent_at_pole,
    linear_roots,
    normalize,
    order_at_infinity,
    poles,
    sqrt_laurent,
)

__all__ = [
    "FieldElem",
    "Rat",
    "fe",
    "rational_sqrt",
    "sqrt_elem",
    "squarefree_decompose",
    "Poly",
    "poly_sqrt",
    "INFINITY",
    "LaurentHead",
    "PoleData",
    "RatFunc",
    "coeff_at_infinity",
    "head_as_ratfunc",
    "laurent_at_infinity",
    "laurent_at_pole",
    "linear_roots",
    "normalize",
    "order_at_infinity",
    "poles",
    "sqrt_laurent",
]
