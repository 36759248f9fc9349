"""Drinfel'd polynomials of sharp tridiagonal systems, in exact arithmetic."""

from .exactfield import QQ, Field
from .params import ParameterArray, TypeData, d4_apply, generate_parameter_array
from .tdtype import TDType

__all__ = ["QQ", "Field", "ParameterArray", "TypeData", "TDType", "d4_apply", "generate_parameter_array"]
__version__ = "0.1.0"
