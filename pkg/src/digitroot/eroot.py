"""Digit-by-digit integer e-th roots and exact perfect power detection.

The radicand is consumed one base-10^e block at a time.  After block ``k``
the pair ``(R_k, D_k)`` satisfies

    N_{<=k} = R_k**e + D_k,    R_k**e <= N_{<=k} < (R_k + 1)**e

where ``N_{<=k}`` is the number formed by the leading ``k + 1`` blocks.  The
final ``D`` is zero exactly when the radicand is a perfect e-th power.  Only
additions, multiplications and comparisons are used.
"""

from __future__ import annotations

from .binomial import IncrementContext
from .blocks import check_exponent, check_radicand, decompose, partial
from .results import InvariantViolation, RootResult, TraceRow

__all__ = [
    "eth_root",
    "is_perfect_power",
    "scan_perfect_power",
    "all_perfect_powers",
]


def _check_step(n, e, k, prev_root, row: TraceRow, ctx: IncrementContext) -> None:
    head = partial(n, e, k)
    r, rem = row.new_root, row.new_remainder
    if rem < 0 or head != r**e + rem:
        raise InvariantViolation(f"step {k}: {head} != {r}^{e} + {rem}")
    if (r + 1) ** e <= head:
        raise InvariantViolation(f"step {k}: ({r}+1)^{e} <= {head}")
    x = row.chosen_digit
    if x < 9 and ctx.phi(x + 1) <= row.scaled_remainder:
        raise InvariantViolation(f"step {k}: digit {x} after root {prev_root} is not maximal")


def eth_root(
    n: int,
    e: int,
    *,
    trace: bool = False,
    check: bool = False,
    strategy: str = "binary",
) -> RootResult:
    """Floor e-th root of ``n`` with its remainder.

    Parameters
    ----------
    n : int
        Non-negative radicand.
    e : int
        Root exponent, at least 2.
    trace : bool
        Record one :class:`TraceRow` per block.
    check : bool
        Verify the remainder invariant and digit maximality after every
        block; a failure raises :class:`InvariantViolation`.
    strategy : {"binary", "scan"}
        Digit search used by the increment kernel.

    Returns
    -------
    RootResult
        ``root**e + remainder == n``; ``perfect`` iff the remainder is 0.
        ``iterations`` is the number of blocks, ``ceil(digits(n) / e)``.

    Examples
    --------
    >>> r = eth_root(3200000, 5)
    >>> r.root, r.remainder, r.perfect
    (20, 0, True)
    >>> eth_root(126, 3).remainder
    1
    """
    check_exponent(e)
    check_radicand(n)
    seq = decompose(n, e)
    shift = 10**e
    root = rem = 0
    rows = []
    for k, block in enumerate(seq.blocks):
        scaled = rem * shift + block
        ctx = IncrementContext(e, root)
        x, inc = ctx.max_digit(scaled, strategy=strategy)
        rem = scaled - inc
        prev, root = root, 10 * root + x
        if trace or check:
            row = TraceRow(k, block, scaled, x, inc, rem, root)
            if check:
                _check_step(n, e, k, prev, row, ctx)
            if trace:
                rows.append(row)
    return RootResult(
        radicand=n,
        exponent=e,
        root=root,
        remainder=rem,
        perfect=rem == 0,
        iterations=len(seq),
        trace=tuple(rows) if trace else None,
    )


def is_perfect_power(n: int, e: int) -> tuple[bool, int | None]:
    """``(True, r)`` if ``n == r**e``, else ``(False, None)``.

    >>> is_perfect_power(125, 3)
    (True, 5)
    >>> is_perfect_power(127, 2)
    (False, None)
    """
    res = eth_root(n, e)
    return (True, res.root) if res.perfect else (False, None)


def all_perfect_powers(n: int) -> list[tuple[int, int]]:
    """Every ``(r, e)`` with ``r**e == n`` and ``2 <= e <= floor(log2 n)``.

    Sorted by descending exponent.  0 and 1 are powers for every exponent;
    they report the single witness ``(n, 2)``.
    """
    check_radicand(n)
    if n < 2:
        return [(n, 2)]
    found = []
    for e in range(n.bit_length() - 1, 1, -1):
        res = eth_root(n, e)
        if res.perfect:
            found.append((res.root, e))
    return found


def scan_perfect_power(n: int) -> tuple[int, int] | None:
    """Witness ``(r, e)`` with the largest exponent such that ``n == r**e``.

    Exponents ``floor(log2 n)`` down to 2 are tried in turn, so the first hit
    is the answer.  Returns ``None`` when ``n`` is not a perfect power.

    >>> scan_perfect_power(64)
    (2, 6)
    >>> scan_perfect_power(7) is None
    True
    """
    check_radicand(n)
    if n < 2:
        return (n, 2)
    for e in range(n.bit_length() - 1, 1, -1):
        res = eth_root(n, e)
        if res.perfect:
            return res.root, e
    return None
