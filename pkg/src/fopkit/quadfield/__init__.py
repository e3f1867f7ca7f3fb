from fopkit.quadfield.numbers import QuadInt, conj, discriminant, fundamental_discriminant, mul, norm, trace
from fopkit.quadfield.units import (
    FundUnit,
    fundamental_unit,
    fundamental_unit_bruteforce,
    perfect_power_decompose,
    unit_first_trace,
    unit_power_decompose,
    unit_root,
)

__all__ = [
    "QuadInt",
    "mul",
    "norm",
    "trace",
    "conj",
    "discriminant",
    "fundamental_discriminant",
    "FundUnit",
    "fundamental_unit",
    "fundamental_unit_bruteforce",
    "unit_power_decompose",
    "unit_first_trace",
    "unit_root",
    "perfect_power_decompose",
]
