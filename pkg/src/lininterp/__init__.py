"""Interpolation over modules of linearized polynomials, with Gabidulin,
KK and MV decoders built on it."""

from .ffield import Field, make_field
from .linpoly import LinPoly, annihilator
from .interp import EvalFunctional, InterpolationResult, ModulePoly, MonomialOrder, interpolate
from .subspace import SubspaceBasis, operator_channel
from .gabidulin import DecodingFailure, GabidulinCode
from .kk import KKCode
from .mv import MVCode, make_code

__all__ = [
    "Field",
    "make_field",
    "LinPoly",
    "annihilator",
    "EvalFunctional",
    "InterpolationResult",
    "ModulePoly",
    "MonomialOrder",
    "interpolate",
    "SubspaceBasis",
    "operator_channel",
    "DecodingFailure",
    "GabidulinCode",
    "KKCode",
    "MVCode",
    "make_code",
]
