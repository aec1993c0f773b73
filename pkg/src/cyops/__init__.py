"""Exact computer algebra for twisted Weierstrass models, their holomorphic
periods, and rigid Calabi-Yau differential operators."""

from cyops.operators import (
    DOperator,
    DegenerateElimination,
    NotSelfDual,
    ThetaOperator,
    TwistFactor,
    conjugate,
    exterior_square,
    hypergeom_operator,
    is_self_dual_order4,
    is_self_dual_order5,
    symmetric_square,
    theta_poly,
    yifan_yang_pullback,
)
from cyops.polys import Frac, MultiPoly, Poly, RatFunc, UPoly
from cyops.series import (
    BiSeries,
    HypergeomSpec,
    NonzeroConstantTerm,
    PoleInCoefficient,
    Rational,
    Series,
    algebraic_power,
    biseries_f2,
    compose,
    default_order,
    hadamard,
    hypergeom_series,
    pochhammer,
)

__all__ = [
    "BiSeries",
    "DOperator",
    "DegenerateElimination",
    "Frac",
    "HypergeomSpec",
    "MultiPoly",
    "NonzeroConstantTerm",
    "NotSelfDual",
    "PoleInCoefficient",
    "Poly",
    "RatFunc",
    "Rational",
    "Series",
    "ThetaOperator",
    "TwistFactor",
    "UPoly",
    "algebraic_power",
    "biseries_f2",
    "compose",
    "conjugate",
    "default_order",
    "exterior_square",
    "hadamard",
    "hypergeom_operator",
    "hypergeom_series",
    "is_self_dual_order4",
    "is_self_dual_order5",
    "pochhammer",
    "symmetric_square",
    "theta_poly",
    "yifan_yang_pullback",
]
