"""Command-line front end.

Exit codes: 0 success, 1 "not a perfect power" (``check-power`` and
``scan-power``), 2 invalid input.  Radicands may be given inline, as ``-``
for stdin, or as ``@path`` to read from a file.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import bench as _bench
from .blocks import InvalidExponentError, check_exponent, parse_decimal, to_decimal
from .eroot import all_perfect_powers, eth_root, scan_perfect_power
from .frac_refine import refine_root
from .frac_sqrt import sqrt_digits
from .isqrt import isqrt_trace
from .oracle import get_method
from .results import ordinal

__all__ = ["main", "render_trace", "build_parser"]

TRACE_HEADERS = ("Step", "Block", "Scaled Δ'", "Trial x", "Φ", "New Δ", "R")


class UsageError(Exception):
    pass


def render_trace(rows, fmt: str = "table") -> str:
    """Render trace rows as an aligned text table or a JSON array."""
    rows = list(rows)
    if not rows:
        raise ValueError("no trace rows to render")
    if fmt == "json":
        return json.dumps([r.as_dict() for r in rows], indent=2)
    if fmt != "table":
        raise ValueError(f"unknown trace format {fmt!r}")
    cells = [TRACE_HEADERS] + [
        (
            str(r.step),
            to_decimal(r.block),
            to_decimal(r.scaled_remainder),
            str(r.chosen_digit),
            to_decimal(r.increment),
            to_decimal(r.new_remainder),
            to_decimal(r.new_root),
        )
        for r in rows
    ]
    widths = [max(len(c[i]) for c in cells) for i in range(len(TRACE_HEADERS))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _read_radicand(text: str) -> int:
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        try:
            with open(text[1:], encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read radicand file: {exc}") from exc
    try:
        return parse_decimal(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _exponent(e: int) -> int:
    try:
        return check_exponent(e)
    except InvalidExponentError as exc:
        raise UsageError(str(exc)) from exc


def _digits(k: int) -> int:
    if k < 0:
        raise UsageError("--digits must be non-negative")
    return k


def _emit(out, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _cmd_root(args, out) -> int:
    n, e = _read_radicand(args.radicand), _exponent(args.exp)
    if args.method != "digit_by_digit":
        if args.trace:
            raise UsageError("--trace is only available with --method digit_by_digit")
        r = get_method(args.method)(n, e)
        rem = n - r**e
        payload = {"radicand": to_decimal(n), "exponent": e, "root": to_decimal(r),
                   "remainder": to_decimal(rem), "perfect": rem == 0, "method": args.method}
    else:
        res = eth_root(n, e, trace=args.trace)
        r, rem = res.root, res.remainder
        payload = res.as_dict() | {"method": args.method}
    if args.json:
        _emit(out, json.dumps(payload, indent=2))
        return 0
    if args.trace:
        _emit(out, render_trace(res.trace))
    kind = "perfect" if rem == 0 else "not a perfect"
    _emit(out, f"{to_decimal(r)} ({kind} {ordinal(e)} power, remainder {to_decimal(rem)})")
    return 0


def _cmd_sqrt(args, out) -> int:
    n, k = _read_radicand(args.radicand), _digits(args.digits)
    exp = sqrt_digits(n, k)
    rows = isqrt_trace(n * 10 ** (2 * k))[1] if args.trace else None
    if args.json:
        payload = {
            "radicand": to_decimal(n), "digits": k, "value": exp.render(),
            "integer_part": to_decimal(exp.integer_part),
            "fraction_digits": "".join(map(str, exp.fraction_digits)),
            "scaled_root": to_decimal(exp.scaled_root),
            "scaled_remainder": to_decimal(exp.scaled_remainder),
        }
        if rows is not None:
            payload["trace"] = [r.as_dict() for r in rows]
        _emit(out, json.dumps(payload, indent=2))
        return 0
    if rows is not None:
        _emit(out, render_trace(rows))
    _emit(out, exp.render())
    return 0


def _cmd_frac_root(args, out) -> int:
    n, e, k = _read_radicand(args.radicand), _exponent(args.exp), _digits(args.digits)
    text, state = refine_root(n, e, k)
    if args.json:
        payload = {"radicand": to_decimal(n), "exponent": e, "digits": k, "value": text,
                   "lower_scaled": to_decimal(state.lower_scaled)}
        _emit(out, json.dumps(payload, indent=2))
    else:
        _emit(out, text)
    return 0


def _cmd_check_power(args, out) -> int:
    n, e = _read_radicand(args.radicand), _exponent(args.exp)
    res = eth_root(n, e)
    if args.json:
        _emit(out, json.dumps(res.as_dict(), indent=2))
    elif res.perfect:
        _emit(out, f"yes: {to_decimal(res.root)}^{e}")
    else:
        _emit(out, f"no: floor root {to_decimal(res.root)}, remainder {to_decimal(res.remainder)}")
    return 0 if res.perfect else 1


def _cmd_scan_power(args, out) -> int:
    n = _read_radicand(args.radicand)
    if args.all:
        found = all_perfect_powers(n)
    else:
        hit = scan_perfect_power(n)
        found = [hit] if hit else []
    if args.json:
        payload = {"radicand": to_decimal(n),
                   "witnesses": [{"root": to_decimal(r), "exponent": e} for r, e in found]}
        _emit(out, json.dumps(payload, indent=2))
    elif found:
        _emit(out, "\n".join(f"{to_decimal(r)}^{e}" for r, e in found))
    else:
        _emit(out, "none")
    return 0 if found else 1


def _cmd_bench(args, out) -> int:
    for e in args.exp:
        _exponent(e)
    if args.reps < 1 or any(L < 1 for L in args.sizes):
        raise UsageError("--reps and --sizes must be positive")
    specs = [(m, e, L, _digits(args.digits))
             for e in args.exp for L in args.sizes for m in args.methods]
    records = _bench.run_bench(specs, seed=args.seed, reps=args.reps)
    if args.format == "csv":
        _emit(out, _bench.to_csv(records))
        return 0
    try:
        fits = _bench.fit_growth(records)
    except _bench.InsufficientDataError:
        fits = None
    _emit(out, _bench.to_json(records, fits))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="digitroot",
        description="Exact digit-by-digit integer roots and perfect power checks.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def radicand(sp):
        sp.add_argument("radicand", help="decimal integer, '-' for stdin, or @file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("root", help="floor e-th root and remainder")
    radicand(sp)
    sp.add_argument("--exp", "-e", type=int, required=True)
    sp.add_argument("--trace", action="store_true", help="print the per-block steps")
    sp.add_argument("--method", default="digit_by_digit", choices=list(_bench.METHODS))
    sp.set_defaults(func=_cmd_root)

    sp = sub.add_parser("sqrt", help="square root truncated to K decimals")
    radicand(sp)
    sp.add_argument("--digits", "-k", type=int, default=0)
    sp.add_argument("--trace", action="store_true")
    sp.set_defaults(func=_cmd_sqrt)

    sp = sub.add_parser("frac-root", help="e-th root truncated to K decimals")
    radicand(sp)
    sp.add_argument("--exp", "-e", type=int, required=True)
    sp.add_argument("--digits", "-k", type=int, default=0)
    sp.set_defaults(func=_cmd_frac_root)

    sp = sub.add_parser("check-power", help="exit 0 iff N is a perfect e-th power")
    radicand(sp)
    sp.add_argument("--exp", "-e", type=int, required=True)
    sp.set_defaults(func=_cmd_check_power)

    sp = sub.add_parser("scan-power", help="find r, e >= 2 with N = r^e")
    radicand(sp)
    sp.add_argument("--all", action="store_true", help="list every witness")
    sp.set_defaults(func=_cmd_scan_power)

    sp = sub.add_parser("bench", help="time digit-by-digit against the oracles")
    sp.add_argument("--methods", nargs="+", default=list(_bench.METHODS),
                    choices=list(_bench.METHODS))
    sp.add_argument("--exp", "-e", type=int, nargs="+", default=[2, 3])
    sp.add_argument("--sizes", "-L", type=int, nargs="+", default=[100, 400, 1600])
    sp.add_argument("--digits", "-k", type=int, default=0)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--reps", type=int, default=5)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=_cmd_bench)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"digitroot: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
