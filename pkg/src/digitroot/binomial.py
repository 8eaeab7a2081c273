"""The binomial increment and maximal digit selection.

Appending a decimal digit ``x`` to a partial root ``r`` raises its e-th power
by exactly

    phi(e, r, x) = (10r + x)**e - (10r)**e = sum_{j=1..e} C(e, j) (10r)**(e-j) x**j

which is strictly increasing in ``x``.  Every root routine in the package
picks the largest digit whose increment still fits the current remainder.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .blocks import check_exponent

__all__ = ["IncrementContext", "binomial_row", "phi", "max_digit"]


@lru_cache(maxsize=64)
def binomial_row(e: int) -> tuple[int, ...]:
    """``(C(e,1), ..., C(e,e))`` from one pass of Pascal's triangle."""
    row = [1]
    for _ in range(e):
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]
    return tuple(row[1:])


@dataclass(frozen=True)
class IncrementContext:
    """Precomputed data for evaluating ``phi(e, root, x)`` over all digits.

    The powers ``(10*root)**1 .. (10*root)**(e-1)`` are built once and shared
    by every trial digit.
    """

    exponent: int
    root: int
    coefficients: tuple[int, ...] = field(init=False)
    scaled_root_powers: tuple[int, ...] = field(init=False)
    _terms: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        e = check_exponent(self.exponent)
        if self.root < 0:
            raise ValueError("root must be non-negative")
        coeffs = binomial_row(e)
        base = 10 * self.root
        powers = []
        p = 1
        for _ in range(e - 1):
            p *= base
            powers.append(p)
        # _terms[j-1] = C(e, j) * (10r)**(e-j), the Horner coefficients
        pw = [1] + powers
        terms = tuple(coeffs[j - 1] * pw[e - j] for j in range(1, e + 1))
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "scaled_root_powers", tuple(powers))
        object.__setattr__(self, "_terms", terms)

    def phi(self, x: int) -> int:
        """Increment for digit ``x`` by Horner's scheme."""
        if x == 0:
            return 0
        terms = self._terms
        acc = terms[-1]
        for j in range(len(terms) - 2, -1, -1):
            acc = acc * x + terms[j]
        return acc * x

    def max_digit(self, budget: int, *, strategy: str = "binary") -> tuple[int, int]:
        """Largest ``x`` in 0..9 with ``phi(x) <= budget``, and ``phi(x)``.

        ``strategy="scan"`` walks down from 9 and stops at the first fit;
        it returns the same answer as the default binary search.
        """
        if budget < 0:
            raise ValueError("budget must be non-negative")
        if strategy == "binary":
            lo, lo_val, hi = 0, 0, 10  # phi(lo) <= budget, phi(hi) > budget
            while hi - lo > 1:
                mid = (lo + hi) // 2
                v = self.phi(mid)
                if v <= budget:
                    lo, lo_val = mid, v
                else:
                    hi = mid
            return lo, lo_val
        if strategy == "scan":
            for x in range(9, 0, -1):
                v = self.phi(x)
                if v <= budget:
                    return x, v
            return 0, 0
        raise ValueError(f"unknown digit search strategy {strategy!r}")


def phi(e: int, r: int, x: int) -> int:
    """``(10r + x)**e - (10r)**e`` for a decimal digit ``x``.

    >>> phi(2, 11, 1)
    221
    >>> phi(3, 0, 5)
    125
    """
    if not 0 <= x <= 9:
        raise ValueError(f"digit must be in 0..9, got {x}")
    return IncrementContext(e, r).phi(x)


def max_digit(e: int, r: int, budget: int, *, strategy: str = "binary") -> tuple[int, int]:
    """Largest digit whose increment over ``r`` fits in ``budget``.

    >>> max_digit(2, 1, 23)
    (1, 21)
    >>> max_digit(3, 0, 125)
    (5, 125)
    """
    return IncrementContext(e, r).max_digit(budget, strategy=strategy)
