"""Exact and high-precision machinery for series generated by powers of arcsin."""

from .exactnum import BasisOverflowError, ExactConst, central_binom, gen_binom_half
from .polyops import RatPoly, apply_operator, invert_operator

__version__ = "0.1.0"

__all__ = [
    "BasisOverflowError",
    "ExactConst",
    "RatPoly",
    "apply_operator",
    "central_binom",
    "gen_binom_half",
    "invert_operator",
]
