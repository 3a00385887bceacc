"""Trigonometric classical r-matrix of the deformed gl(2|2) loop algebra."""

__version__ = "0.1.0"

from .params import (GlobalParams, Kinematics, ParameterError, PoleError, derive_kinematics, make_global,
                     preferred_kinematics)
from .rmatrix import CoefficientSet, RMatrix, coefficients, cybe_residual, r_fund_table, r_fund_universal

__all__ = [
    "CoefficientSet", "GlobalParams", "Kinematics", "ParameterError", "PoleError", "RMatrix", "__version__",
    "coefficients", "cybe_residual", "derive_kinematics", "make_global", "preferred_kinematics",
    "r_fund_table", "r_fund_universal",
]
