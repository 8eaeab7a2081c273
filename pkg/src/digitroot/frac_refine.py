"""Fractional e-th roots by decimal interval refinement.

Start from ``[R, R + 1)`` with ``R = floor(N**(1/e))`` and shrink the width by
a factor of ten per step, keeping ``L**e <= N < (L + w)**e``.  Everything is
carried as scaled integers: at step ``j`` the lower end is ``L_j / 10**j`` and
the invariant reads

    lower_scaled**e <= N * 10**(e*j) < (lower_scaled + 1)**e

The result after ``k`` steps is within ``10**-k`` below the true root.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomial import IncrementContext
from .blocks import check_exponent, check_radicand, parse_decimal, to_decimal
from .eroot import eth_root

__all__ = ["RefinementState", "refine_root", "refine_more"]


@dataclass(frozen=True)
class RefinementState:
    """Interval ``[lower_scaled, lower_scaled + 1) / 10**step`` around the root.

    ``remainder`` is ``N * 10**(e*step) - lower_scaled**e`` and lets the
    refinement resume without recomputing powers from scratch.
    """

    radicand: int
    exponent: int
    step: int
    lower_scaled: int
    remainder: int

    @property
    def integer_part(self) -> int:
        if self.step == 0:
            return self.lower_scaled
        return parse_decimal(self.render().rsplit(".", 1)[0])

    def render(self) -> str:
        s = to_decimal(self.lower_scaled)
        if self.step == 0:
            return s
        s = s.rjust(self.step + 1, "0")
        return s[: -self.step] + "." + s[-self.step :]

    @property
    def fraction_digits(self) -> tuple[int, ...]:
        if self.step == 0:
            return ()
        return tuple(int(c) for c in self.render().rsplit(".", 1)[1])


def _refine(state: RefinementState, extra: int) -> RefinementState:
    e = state.exponent
    shift = 10**e
    lower, rem = state.lower_scaled, state.remainder
    for _ in range(extra):
        # budget = N * 10**(e(j+1)) - (10 L)**e
        budget = rem * shift
        x, inc = IncrementContext(e, lower).max_digit(budget)
        rem = budget - inc
        lower = 10 * lower + x
    return RefinementState(state.radicand, e, state.step + extra, lower, rem)


def refine_root(n: int, e: int, k: int) -> tuple[str, RefinementState]:
    """``n**(1/e)`` truncated to ``k`` decimal places.

    Returns the rendered decimal and the final refinement state.

    >>> refine_root(2, 7, 10)[0]
    '1.1040895136'
    >>> refine_root(8, 3, 4)[0]
    '2.0000'
    """
    check_exponent(e)
    check_radicand(n)
    if k < 0:
        raise ValueError("digit count must be non-negative")
    base = eth_root(n, e)
    state = _refine(RefinementState(n, e, 0, base.root, base.remainder), k)
    return state.render(), state


def refine_more(state: RefinementState, extra: int) -> RefinementState:
    """Continue an existing refinement by ``extra`` decimal steps."""
    if extra < 0:
        raise ValueError("digit count must be non-negative")
    return _refine(state, extra)
