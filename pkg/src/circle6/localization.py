"""Localized invariants from fixed-point weight data.

For an almost complex circle action with isolated fixed points, the
fixed-point localization theorem turns characteristic numbers into finite
sums over the fixed points. With weights w_{p,1}, ..., w_{p,n} at p:

    c_1^3[M]  =  sum_p (w_{p,1} + ... + w_{p,n})^3 / (w_{p,1} * ... * w_{p,n})

for n = 3, computed here over exact rationals (there are no tolerance
parameters in this module; the whole point of the integrality check is
that the sum must cancel to an integer for consistent data).

Counting fixed points by their number of negative weights gives the
coefficients of the chi_y genus,

    chi_y = sum_p N_p (-y)^p,   N_p = #{points with exactly p negative weights},

so chi_{y=-1} is the Euler characteristic (the number of fixed points) and
the constant term N_0 is the Todd genus, which also equals c_1 c_2 / 24.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .core import FixedPointData, format_rational, validate
from .errors import InvalidData, NonIntegralChernNumber, WrongDimension


def _require_valid(data: FixedPointData) -> None:
    violations = validate(data)
    if violations:
        raise InvalidData(violations)


def c1_cubed(data: FixedPointData) -> Fraction:
    """Exact value of the c_1^3 localization sum (the lenient entry point).

    Returns the raw rational without an integrality gate; use
    :func:`chern_report` to insist the dataset is consistent.
    """
    _require_valid(data)
    if data.n != 3:
        raise WrongDimension(f"c_1^3 is defined for n = 3, got n = {data.n}")
    total = Fraction(0)
    for p in data.points:
        total += Fraction(sum(p.weights)) ** 3 / prod(p.weights)
    return total


def chi_y_profile(data: FixedPointData) -> list[int]:
    """Coefficients N_0 ... N_n counting points by number of negative weights."""
    _require_valid(data)
    counts = [0] * (data.n + 1)
    for p in data.points:
        counts[p.negatives()] += 1
    return counts


def todd_genus(data: FixedPointData) -> int:
    """N_0: the number of fixed points with every weight positive."""
    return chi_y_profile(data)[0]


@dataclass(frozen=True)
class ChernReport:
    """All localized invariants of one dataset.

    Satisfies euler == sum(chi_y_coeffs) == number of fixed points and
    c1c2 == 24 * todd; c1_cubed is integral by construction (the factory
    refuses non-integral sums).
    """

    c1_cubed: Fraction
    todd: int
    c1c2: int
    euler: int
    chi_y_coeffs: tuple[int, ...]

    def as_json_dict(self) -> dict:
        return {
            "c1_cubed": format_rational(self.c1_cubed),
            "todd": self.todd,
            "c1c2": self.c1c2,
            "euler": self.euler,
            "chi_y_coeffs": list(self.chi_y_coeffs),
        }


def chern_report(data: FixedPointData) -> ChernReport:
    """Full report with the integrality gate.

    Raises NonIntegralChernNumber when the c_1^3 sum has a denominator:
    such weight data cannot come from a closed almost complex manifold.
    """
    value = c1_cubed(data)
    if value.denominator != 1:
        raise NonIntegralChernNumber(value)
    coeffs = chi_y_profile(data)
    n0 = coeffs[0]
    return ChernReport(
        c1_cubed=value,
        todd=n0,
        c1c2=24 * n0,
        euler=len(data.points),
        chi_y_coeffs=tuple(coeffs),
    )
