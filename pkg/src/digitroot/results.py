"""Result records shared by the integer root routines."""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import to_decimal

__all__ = ["TraceRow", "RootResult", "InvariantViolation", "ordinal"]


class InvariantViolation(AssertionError):
    """A per-step remainder invariant failed while checking was enabled."""


@dataclass(frozen=True)
class TraceRow:
    """One block step: bring down ``block``, pick ``chosen_digit``.

    ``scaled_remainder`` is the remainder after the block was brought down,
    i.e. the value the digit test is run against.
    """

    step: int
    block: int
    scaled_remainder: int
    chosen_digit: int
    increment: int
    new_remainder: int
    new_root: int

    def as_dict(self) -> dict:
        # big values go out as strings so JSON consumers never lose precision
        return {
            "step": self.step,
            "block": to_decimal(self.block),
            "scaled_remainder": to_decimal(self.scaled_remainder),
            "digit": self.chosen_digit,
            "increment": to_decimal(self.increment),
            "remainder": to_decimal(self.new_remainder),
            "root": to_decimal(self.new_root),
        }


@dataclass(frozen=True)
class RootResult:
    radicand: int
    exponent: int
    root: int
    remainder: int
    perfect: bool
    iterations: int
    trace: tuple[TraceRow, ...] | None = None

    def as_dict(self) -> dict:
        d = {
            "radicand": to_decimal(self.radicand),
            "exponent": self.exponent,
            "root": to_decimal(self.root),
            "remainder": to_decimal(self.remainder),
            "perfect": self.perfect,
            "iterations": self.iterations,
        }
        if self.trace is not None:
            d["trace"] = [row.as_dict() for row in self.trace]
        return d


def ordinal(n: int) -> str:
    """``1st``, ``2nd``, ``3rd``, ``4th``, ..., ``11th``, ``12th``, ``21st``."""
    if 10 <= n % 100 <= 20:
        suffix = "th"
    else:
        suffix = {1: "st", 2: "nd", 3: "rd"}.get(n % 10, "th")
    return f"{n}{suffix}"
