"""Exact homological computations for quantum tori.

The algebraic quantum torus is generated by x_1^{+-1}, ..., x_n^{+-1} with
x_i x_j = q_ij x_j x_i.  Phases q_ij = exp(2 pi i theta_ij) are exact: a
root of unity times a monomial in formal irrationals.
"""

from .field import CoeffField, CoeffScalar, CyclotomicField
from .laurent import QLaurent, ScalingAutomorphism, compose_twists, multiply
from .phase import Angle, ThetaMatrix

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "CoeffField",
    "CoeffScalar",
    "CyclotomicField",
    "QLaurent",
    "ScalingAutomorphism",
    "ThetaMatrix",
    "compose_twists",
    "multiply",
]
