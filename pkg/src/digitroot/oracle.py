"""Reference floor-root routines used to cross-check the digit methods.

Both use division freely, so they fail in different ways from the
block-by-block algorithms they are compared against.
"""

from __future__ import annotations

import enum

from .blocks import check_exponent, check_radicand

__all__ = ["OracleMethod", "binary_search_root", "newton_root", "get_method"]


class OracleMethod(enum.Enum):
    binary_search = "bisection on r comparing r**e with n"
    newton = "integer Newton iteration from above with a final exact correction"

    @property
    def description(self) -> str:
        return self.value


def binary_search_root(n: int, e: int) -> int:
    """Floor e-th root by bisection over ``[0, 2**(ceil(bits/e) + 1)]``.

    >>> binary_search_root(12321, 2)
    111
    >>> binary_search_root(10**18, 6)
    1000
    """
    check_exponent(e)
    check_radicand(n)
    lo = 0
    hi = 1 << (-(-n.bit_length() // e) + 1)  # hi**e > n always
    while hi - lo > 1:
        mid = (lo + hi) >> 1
        if mid**e <= n:
            lo = mid
        else:
            hi = mid
    return lo


def newton_root(n: int, e: int) -> int:
    """Floor e-th root by Newton's method on integers.

    >>> newton_root(125, 3)
    5
    >>> newton_root(3200001, 5)
    20
    """
    check_exponent(e)
    check_radicand(n)
    if n < 2:
        return n
    r = 1 << -(-n.bit_length() // e)  # 2**ceil(bits/e) >= n**(1/e)
    while True:
        t = ((e - 1) * r + n // r ** (e - 1)) // e
        if t >= r:
            break
        r = t
    # iteration from above stops at the floor; keep an explicit safety net
    for _ in range(2):
        if r**e > n:
            r -= 1
        elif (r + 1) ** e <= n:
            r += 1
    if not (r**e <= n < (r + 1) ** e):
        raise ArithmeticError(f"newton_root failed to converge for e={e}")
    return r


_METHODS = {
    OracleMethod.binary_search: binary_search_root,
    OracleMethod.newton: newton_root,
}


def get_method(name: str | OracleMethod):
    """Root function for an oracle method name."""
    return _METHODS[OracleMethod[name] if isinstance(name, str) else name]
