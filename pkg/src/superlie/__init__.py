"""Exact rational computations with Lie superalgebras and supergroup coordinates.

Everything in this package works over the field of rational numbers with
exact arithmetic; there are no floating point numbers anywhere.
"""

from .grassmann import GrassmannElement, NotUnitError, ParityError, merge_sign, unit_inverse
from .supermatrix import SingularError, SuperMatrix

__all__ = [
    "GrassmannElement",
    "NotUnitError",
    "ParityError",
    "SingularError",
    "SuperMatrix",
    "merge_sign",
    "unit_inverse",
]
