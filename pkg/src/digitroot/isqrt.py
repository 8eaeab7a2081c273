"""Classical pair-wise long-division square root.

This is the ``e = 2`` case of :func:`digitroot.eroot.eth_root` written with
the familiar digit test ``(20R + x) * x <= D``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import check_radicand, decompose, partial
from .results import InvariantViolation, RootResult, TraceRow

__all__ = ["RootState", "isqrt", "isqrt_trace", "sqrt_step"]


@dataclass(frozen=True)
class RootState:
    """Partial root and remainder after ``blocks_done`` blocks."""

    partial_root: int
    remainder: int
    blocks_done: int
    exponent: int = 2


def sqrt_step(root: int, budget: int) -> tuple[int, int]:
    """Largest digit ``x`` with ``(20*root + x) * x <= budget``, and that product."""
    twenty_r = 20 * root
    lo, lo_val, hi = 0, 0, 10
    while hi - lo > 1:
        mid = (lo + hi) // 2
        v = (twenty_r + mid) * mid
        if v <= budget:
            lo, lo_val = mid, v
        else:
            hi = mid
    return lo, lo_val


def _run(n: int, *, trace: bool, check: bool) -> RootResult:
    check_radicand(n)
    seq = decompose(n, 2)
    state = RootState(0, 0, 0)
    rows = []
    for k, block in enumerate(seq.blocks):
        scaled = 100 * state.remainder + block
        x, inc = sqrt_step(state.partial_root, scaled)
        state = RootState(10 * state.partial_root + x, scaled - inc, k + 1)
        if trace:
            rows.append(
                TraceRow(k, block, scaled, x, inc, state.remainder, state.partial_root)
            )
        if check:
            head = partial(n, 2, k)
            r, d = state.partial_root, state.remainder
            if d < 0 or head != r * r + d or (r + 1) ** 2 <= head:
                raise InvariantViolation(f"step {k}: root {r}, remainder {d}, head {head}")
    r, d = state.partial_root, state.remainder
    return RootResult(n, 2, r, d, d == 0, len(seq), tuple(rows) if trace else None)


def isqrt(n: int, *, check: bool = False) -> RootResult:
    """Floor square root of ``n`` and its remainder.

    >>> r = isqrt(12321)
    >>> r.root, r.remainder, r.perfect
    (111, 0, True)
    >>> isqrt(99).remainder
    18
    """
    return _run(n, trace=False, check=check)


def isqrt_trace(n: int, *, check: bool = False) -> tuple[RootResult, list[TraceRow]]:
    res = _run(n, trace=True, check=check)
    return res, list(res.trace)
