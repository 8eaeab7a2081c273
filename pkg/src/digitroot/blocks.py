"""Base-10^e digit blocks of a non-negative integer.

The root algorithms consume a radicand one block of ``e`` decimal digits at a
time, most significant block first.  Everything here works on the decimal
string so no division is involved.
"""

from __future__ import annotations

import decimal
import re
import sys
from dataclasses import dataclass

__all__ = [
    "BlockSequence",
    "InvalidExponentError",
    "decompose",
    "partial",
    "to_decimal",
    "parse_decimal",
    "check_exponent",
    "check_radicand",
]

_DIGITS = re.compile(r"[0-9]+")
# int <-> str conversion is capped on newer CPythons; fall back to decimal.
_STR_LIMIT = getattr(sys, "get_int_max_str_digits", lambda: 0)() or None


class InvalidExponentError(ValueError):
    """Raised when a root exponent is not an integer >= 2."""


def check_exponent(e: int) -> int:
    if isinstance(e, bool) or not isinstance(e, int):
        raise InvalidExponentError(f"exponent must be an integer, got {e!r}")
    if e < 2:
        raise InvalidExponentError(f"exponent must be >= 2, got {e}")
    return e


def check_radicand(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"radicand must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"radicand must be non-negative, got {n}")
    return n


def to_decimal(n: int) -> str:
    """Decimal string of ``n``, without the interpreter's digit cap."""
    if _STR_LIMIT is None or n.bit_length() < 3 * _STR_LIMIT:
        return str(n)
    with decimal.localcontext() as ctx:
        ctx.prec = decimal.MAX_PREC
        return format(decimal.Decimal(n), "f")


def parse_decimal(text: str) -> int:
    """Parse a plain non-negative decimal integer (surrounding whitespace ok).

    >>> parse_decimal(" 00123 ")
    123
    >>> parse_decimal("1e3")
    Traceback (most recent call last):
    ...
    ValueError: not a non-negative decimal integer: '1e3'
    """
    s = text.strip()
    if not _DIGITS.fullmatch(s):
        shown = s if len(s) <= 40 else s[:37] + "..."
        raise ValueError(f"not a non-negative decimal integer: {shown!r}")
    if _STR_LIMIT is None or len(s) <= _STR_LIMIT:
        return int(s)
    with decimal.localcontext() as ctx:
        ctx.prec = decimal.MAX_PREC
        return int(decimal.Decimal(s))


@dataclass(frozen=True)
class BlockSequence:
    """Blocks ``a_m .. a_0`` of a radicand, most significant first.

    Each block lies in ``[0, 10**exponent)``.  ``source_digit_count`` is the
    number of decimal digits of the original value (1 for zero).
    """

    exponent: int
    blocks: tuple[int, ...]
    source_digit_count: int

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, i):
        return self.blocks[i]

    @property
    def m(self) -> int:
        """Index of the lowest block; the sequence has ``m + 1`` blocks."""
        return len(self.blocks) - 1

    def recompose(self) -> int:
        base = 10**self.exponent
        n = 0
        for b in self.blocks:
            n = n * base + b
        return n


def _padded(n: int, e: int) -> tuple[str, int]:
    s = to_decimal(n)
    width = -(-len(s) // e) * e
    return s.rjust(width, "0"), len(s)


def decompose(n: int, e: int) -> BlockSequence:
    """Split ``n`` into blocks of ``e`` decimal digits, highest block first.

    The decimal string is left-padded with zeros to a multiple of ``e``.

    >>> decompose(12321, 2).blocks
    (1, 23, 21)
    >>> decompose(3200000, 5).blocks
    (32, 0)
    >>> decompose(0, 5).blocks
    (0,)
    """
    check_exponent(e)
    check_radicand(n)
    s, ndigits = _padded(n, e)
    conv = int if e < 4000 else parse_decimal
    blocks = tuple(conv(s[i : i + e]) for i in range(0, len(s), e))
    return BlockSequence(e, blocks, ndigits)


def partial(n: int, e: int, k: int) -> int:
    """Integer formed by the highest ``k + 1`` blocks of ``n``.

    Equal to ``n // 10**(e*(m-k))`` where ``m + 1`` is the block count.
    """
    check_exponent(e)
    check_radicand(n)
    s, _ = _padded(n, e)
    m = len(s) // e - 1
    if not 0 <= k <= m:
        raise IndexError(f"block index {k} outside 0..{m}")
    return parse_decimal(s[: (k + 1) * e])
