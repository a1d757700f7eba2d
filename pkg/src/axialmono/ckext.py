"""Cauchy-Kowalevski extension of polynomial data from R^m into R^{m+1}."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .mpoly import CliffPoly, cr_left, cr_right, dirac_left, dirac_right


class NotTwoSidedData(ValueError):
    """Initial data violating ``D g = g D``; ``difference`` holds ``D g - g D``."""

    def __init__(self, difference: CliffPoly):
        super().__init__("initial data does not satisfy D g = g D")
        self.difference = difference


def ck_extend(g: CliffPoly) -> CliffPoly:
    """Left monogenic extension ``sum_n (-x_0)^n / n! D^n g``.

    The series terminates because the Dirac operator lowers degree.
    """
    if g.has_x0():
        raise ValueError("initial data must not depend on x_0")
    m = g.m
    x0 = CliffPoly.var(m, 0)
    out = CliffPoly.zero(m)
    term = g
    n = 0
    fact = 1
    power = CliffPoly.constant(1, m)
    while not term.is_zero():
        out = out + (power * term).scale(Fraction((-1) ** n, fact))
        term = dirac_left(term)
        n += 1
        fact *= n
        power = power * x0
    return out


def ck_two_sided(g: CliffPoly) -> CliffPoly:
    """CK extension of data satisfying ``D g = g D``; the result is two-sided."""
    diff = dirac_left(g) - dirac_right(g)
    if not diff.is_zero():
        raise NotTwoSidedData(diff)
    return ck_extend(g)


@dataclass(frozen=True)
class Verification:
    left_residual: CliffPoly
    right_residual: CliffPoly

    @property
    def left_zero(self) -> bool:
        return self.left_residual.is_zero()

    @property
    def right_zero(self) -> bool:
        return self.right_residual.is_zero()

    def as_record(self) -> dict[str, str]:
        return {"left_residual": "0" if self.left_zero else "nonzero",
                "right_residual": "0" if self.right_zero else "nonzero"}


def verify(f: CliffPoly) -> Verification:
    return Verification(cr_left(f), cr_right(f))
