"""Timing harness for the digit method against the oracle root routines.

Each cell ``(e, L)`` gets one random ``L``-digit radicand derived from the
seed, shared by every method.  With ``k > 0`` fractional digits every method
computes ``floor(n**(1/e) * 10**k)``: the digit method through interval
refinement, the oracles on the scaled radicand.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import random
import statistics
import time
from dataclasses import asdict, dataclass

import numpy as np

from .blocks import check_exponent, to_decimal
from .eroot import eth_root
from .frac_refine import refine_root
from .oracle import binary_search_root, newton_root

__all__ = [
    "METHODS",
    "BenchRecord",
    "GrowthFit",
    "InsufficientDataError",
    "cell_radicand",
    "run_bench",
    "fit_growth",
    "to_csv",
    "to_json",
]

CSV_FIELDS = ("method", "e", "L", "k", "median_ns", "reps", "checksum")


class InsufficientDataError(ValueError):
    pass


def _digit_by_digit(n: int, e: int, k: int) -> tuple[int, int | None]:
    if k == 0:
        res = eth_root(n, e)
        return res.root, res.iterations
    _, state = refine_root(n, e, k)
    return state.lower_scaled, None


def _oracle(fn):
    def run(n: int, e: int, k: int) -> tuple[int, None]:
        return fn(n * 10 ** (e * k), e), None

    return run


METHODS = {
    "digit_by_digit": _digit_by_digit,
    "binary_search": _oracle(binary_search_root),
    "newton": _oracle(newton_root),
}


@dataclass(frozen=True)
class BenchRecord:
    method: str
    exponent: int
    digit_count: int
    fractional_digits: int
    wall_time: int  # median nanoseconds
    repetitions: int
    checksum: str
    iterations: int | None = None

    def csv_row(self) -> dict:
        return {
            "method": self.method,
            "e": self.exponent,
            "L": self.digit_count,
            "k": self.fractional_digits,
            "median_ns": self.wall_time,
            "reps": self.repetitions,
            "checksum": self.checksum,
        }


def checksum(root: int) -> str:
    return hashlib.sha256(to_decimal(root).encode()).hexdigest()[:16]


def cell_radicand(seed: int, e: int, L: int) -> int:
    """Uniform ``L``-digit radicand for the cell ``(e, L)``."""
    rng = random.Random(f"{seed}:{e}:{L}")
    return rng.randrange(10 ** (L - 1) if L > 1 else 0, 10**L)


def run_bench(specs, seed: int = 0, reps: int = 5) -> list[BenchRecord]:
    """Time each ``(method, e, L, k)`` entry ``reps`` times.

    Runs strictly sequentially in the calling thread.  Records the median
    wall time in nanoseconds.
    """
    if reps < 1:
        raise ValueError("reps must be >= 1")
    records = []
    for method, e, L, k in specs:
        if method not in METHODS:
            raise ValueError(f"unsupported method {method!r}")
        check_exponent(e)
        if L < 1 or k < 0:
            raise ValueError(f"bad size L={L}, k={k}")
        fn = METHODS[method]
        n = cell_radicand(seed, e, L)
        times = []
        for _ in range(reps):
            t0 = time.perf_counter_ns()
            root, iters = fn(n, e, k)
            times.append(time.perf_counter_ns() - t0)
        records.append(
            BenchRecord(
                method, e, L, k,
                max(1, int(statistics.median(times))),
                reps, checksum(root), iters,
            )
        )
    return records


@dataclass(frozen=True)
class GrowthFit:
    """Least-squares fit of ``log(time) = slope * log(L) + intercept``."""

    method: str
    exponent: int
    fractional_digits: int
    sizes: tuple[int, ...]
    slope: float
    intercept: float
    residuals: tuple[float, ...]
    r_squared: float | None
    poor_fit: bool


def fit_growth(records, min_r_squared: float = 0.9) -> list[GrowthFit]:
    """Log-log slope of time against ``L`` per ``(method, e, k)`` group.

    A report only; nothing is asserted about the slope.  ``poor_fit`` is set
    when ``r_squared`` is below ``min_r_squared`` or undefined (all times
    equal).
    """
    groups: dict[tuple, list[BenchRecord]] = {}
    for r in records:
        groups.setdefault((r.method, r.exponent, r.fractional_digits), []).append(r)
    if not groups:
        raise InsufficientDataError("no records")
    fits = []
    for (method, e, k), recs in sorted(groups.items()):
        sizes = sorted({r.digit_count for r in recs})
        if len(sizes) < 3:
            raise InsufficientDataError(
                f"{method} e={e} k={k}: need >= 3 distinct L, got {len(sizes)}"
            )
        x = np.log([r.digit_count for r in recs])
        y = np.log([r.wall_time for r in recs])
        slope, intercept = np.polyfit(x, y, 1)
        resid = y - (slope * x + intercept)
        ss_tot = float(np.sum((y - y.mean()) ** 2))
        r2 = None if ss_tot == 0.0 else 1.0 - float(np.sum(resid**2)) / ss_tot
        fits.append(
            GrowthFit(
                method, e, k, tuple(sizes),
                float(slope), float(intercept),
                tuple(float(v) for v in resid),
                r2, r2 is None or r2 < min_r_squared,
            )
        )
    return fits


def to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow(r.csv_row())
    return buf.getvalue()


def to_json(records, fits=None) -> str:
    doc = {"records": [asdict(r) for r in records]}
    if fits is not None:
        doc["growth"] = [asdict(f) for f in fits]
    return json.dumps(doc, indent=2)
