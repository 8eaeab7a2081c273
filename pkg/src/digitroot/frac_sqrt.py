"""Exact decimal digits of a square root.

After ``k`` fractional digits the scaled root ``R_k`` and remainder ``D_k``
satisfy ``N * 10**(2k) = R_k**2 + D_k`` with ``R_k = floor(10**k * sqrt(N))``.
Each digit is therefore final: asking for more digits only appends.  The
output is a truncation, never a rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import check_radicand, to_decimal
from .isqrt import isqrt, sqrt_step

__all__ = ["FractionalExpansion", "sqrt_digits", "extend"]


@dataclass(frozen=True)
class FractionalExpansion:
    radicand: int
    digits_requested: int
    integer_part: int
    fraction_digits: tuple[int, ...]
    scaled_root: int
    scaled_remainder: int

    def render(self) -> str:
        """``"<integer part>.<digits>"``; just the integer part when no digits."""
        head = to_decimal(self.integer_part)
        if not self.fraction_digits:
            return head
        return head + "." + "".join(map(str, self.fraction_digits))

    def __str__(self) -> str:
        return self.render()


def _continue(
    n: int, int_part: int, digits: list[int], root: int, rem: int, extra: int
) -> FractionalExpansion:
    for _ in range(extra):
        rem *= 100
        x, inc = sqrt_step(root, rem)
        rem -= inc
        root = 10 * root + x
        digits.append(x)
    return FractionalExpansion(n, len(digits), int_part, tuple(digits), root, rem)


def sqrt_digits(n: int, k: int) -> FractionalExpansion:
    """``sqrt(n)`` truncated to ``k`` decimal places.

    >>> sqrt_digits(2, 10).render()
    '1.4142135623'
    >>> sqrt_digits(4, 3).render()
    '2.000'
    """
    check_radicand(n)
    if k < 0:
        raise ValueError("digit count must be non-negative")
    base = isqrt(n)
    return _continue(n, base.root, [], base.root, base.remainder, k)


def extend(exp: FractionalExpansion, extra: int) -> FractionalExpansion:
    """Compute ``extra`` further digits, resuming from the stored root/remainder.

    The existing digits are carried over unchanged.
    """
    if extra < 0:
        raise ValueError("digit count must be non-negative")
    if extra == 0:
        return exp
    return _continue(
        exp.radicand,
        exp.integer_part,
        list(exp.fraction_digits),
        exp.scaled_root,
        exp.scaled_remainder,
        extra,
    )
