"""Exact commutative-algebra kernel: Laurent polynomials, integer normal
forms, rational-function coefficients, and diagonalization over the
univariate PID they generate."""

from .laurent import (
    LaurentPolynomial,
    degree_spread,
    divides,
    exact_divide,
    laurent_gcd,
    unit_normalize,
)
from .matrices import (
    IntMatrix,
    LaurentMatrix,
    iter_minors,
    minors,
    smith_normal_form_int,
)
from .ratfunc import (
    RationalFunction,
    UniPoly,
    UniPolyMatrix,
    diagonalize_over_pid,
    grade_substitute,
)

__all__ = [
    "LaurentPolynomial",
    "degree_spread",
    "divides",
    "exact_divide",
    "laurent_gcd",
    "unit_normalize",
    "IntMatrix",
    "LaurentMatrix",
    "iter_minors",
    "minors",
    "smith_normal_form_int",
    "RationalFunction",
    "UniPoly",
    "UniPolyMatrix",
    "diagonalize_over_pid",
    "grade_substitute",
]
