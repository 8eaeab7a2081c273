"""Exact digit-by-digit integer roots over arbitrary-precision integers.

Integer e-th roots, perfect power detection, exact square root digits and
bounded-error fractional e-th roots, all using integer arithmetic only.
"""

from .binomial import IncrementContext, max_digit, phi
from .blocks import BlockSequence, InvalidExponentError, decompose, partial
from .eroot import all_perfect_powers, eth_root, is_perfect_power, scan_perfect_power
from .frac_refine import RefinementState, refine_more, refine_root
from .frac_sqrt import FractionalExpansion, extend, sqrt_digits
from .isqrt import RootState, isqrt, isqrt_trace
from .oracle import OracleMethod, binary_search_root, newton_root
from .results import InvariantViolation, RootResult, TraceRow

__version__ = "0.1.0"

__all__ = [
    "BlockSequence",
    "FractionalExpansion",
    "IncrementContext",
    "InvalidExponentError",
    "InvariantViolation",
    "OracleMethod",
    "RefinementState",
    "RootResult",
    "RootState",
    "TraceRow",
    "all_perfect_powers",
    "binary_search_root",
    "decompose",
    "eth_root",
    "extend",
    "is_perfect_power",
    "isqrt",
    "isqrt_trace",
    "max_digit",
    "newton_root",
    "partial",
    "phi",
    "refine_more",
    "refine_root",
    "scan_perfect_power",
    "sqrt_digits",
]
