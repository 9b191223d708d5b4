"""Exact-integer audit of the dimension-elimination argument.

Everything here is integer arithmetic on Python ints, so results are exact
and reruns are bit-identical.  Four seed polynomials in the dimension are
mixed into three composites, and the alternating sum of four product terms
must stay nonzero for the elimination to go through; rows where it or the
factored seed vanish are flagged.

The two trigonometric coefficient evaluators at the bottom feed the same
argument: a slope candidate as a ratio of radius polynomials, and the
coefficients of the quartic (in a radius power) that the slope must satisfy.
"""

from __future__ import annotations

import dataclasses
from typing import Callable, Iterable

import numpy as np

from .errors import SingularFormulaError
from .geometry_core import check_dimension

__all__ = [
    "AuditRow",
    "CompositeValues",
    "RadialCoefficients",
    "SEED_POLYNOMIALS",
    "SeedValues",
    "audit_table",
    "base_polynomials",
    "composite_polynomials",
    "obstruction_sum",
    "obstruction_terms",
    "radial_polynomial_coefficients",
    "slope_ratio",
    "slope_ratio_coefficients",
]


def _septic(n: int) -> int:
    return (2 * n**7 - 44 * n**6 + 325 * n**5 - 807 * n**4
            - 796 * n**3 + 6906 * n**2 - 10227 * n + 4545)


def _octic(n: int) -> int:
    return (10 * n**8 - 273 * n**7 + 3089 * n**6 - 18843 * n**5
            + 67223 * n**4 - 140907 * n**3 + 162003 * n**2
            - 81929 * n + 5851)


def _nonic(n: int) -> int:
    return (3 * n**9 - 104 * n**8 + 1549 * n**7 - 13028 * n**6
            + 68261 * n**5 - 230910 * n**4 + 502291 * n**3
            - 670392 * n**2 + 486104 * n - 137246)


def _quartic(n: int) -> int:
    return n**4 - 24 * n**3 + 194 * n**2 - 624 * n + 709


def _factored_septic(n: int) -> int:
    return -3 * (n - 7) * (n - 3) * (n - 1) * _quartic(n)


def _quintic(n: int) -> int:
    return 3 * n**5 - 56 * n**4 + 398 * n**3 - 1380 * n**2 + 2367 * n - 1604


def _negated_quartic(n: int) -> int:
    return -(2 * n**4 - 29 * n**3 + 129 * n**2 - 219 * n + 105)


# Raw evaluators, no dimension validation: usable at any integer argument,
# e.g. to check the factored seed against its expansion off-range.
SEED_POLYNOMIALS: dict[str, Callable[[int], int]] = {
    "septic": _septic,
    "octic": _octic,
    "nonic": _nonic,
    "quartic": _quartic,
    "factored_septic": _factored_septic,
    "quintic": _quintic,
    "negated_quartic": _negated_quartic,
}


@dataclasses.dataclass(frozen=True)
class SeedValues:
    """The four seed polynomials at a fixed dimension (exact ints)."""

    septic: int
    octic: int
    nonic: int
    factored_septic: int


@dataclasses.dataclass(frozen=True)
class CompositeValues:
    """Auxiliary polynomials and the three seed combinations (exact ints).

    combo1 = septic * (-negated_quartic) + octic * (n+1)^2
    combo2 = septic * quintic + nonic * (n+1)^2
    combo3 = septic * quartic + factored_septic * (n+1)^2
    """

    quintic: int
    negated_quartic: int
    quartic: int
    combo1: int
    combo2: int
    combo3: int


@dataclasses.dataclass(frozen=True)
class AuditRow:
    """One audited dimension: all intermediate values and the verdict."""

    n: int
    seeds: SeedValues
    composites: CompositeValues
    terms: tuple[int, int, int, int]
    total: int
    nonvanishing: bool
    notes: tuple[str, ...]


def base_polynomials(n: int) -> SeedValues:
    """Evaluate the four seed polynomials at dimension n (exact)."""
    n = check_dimension(n)
    return SeedValues(
        septic=_septic(n),
        octic=_octic(n),
        nonic=_nonic(n),
        factored_septic=_factored_septic(n),
    )


def composite_polynomials(n: int) -> CompositeValues:
    """Evaluate the auxiliary polynomials and seed combinations at n."""
    n = check_dimension(n)
    seeds = base_polynomials(n)
    shift = (n + 1) ** 2
    quintic = _quintic(n)
    negated_quartic = _negated_quartic(n)
    quartic = _quartic(n)
    return CompositeValues(
        quintic=quintic,
        negated_quartic=negated_quartic,
        quartic=quartic,
        combo1=seeds.septic * (-negated_quartic) + seeds.octic * shift,
        combo2=seeds.septic * quintic + seeds.nonic * shift,
        combo3=seeds.septic * quartic + seeds.factored_septic * shift,
    )


def obstruction_terms(n: int) -> tuple[int, int, int, int]:
    """The four signed product terms whose sum obstructs the elimination."""
    n = check_dimension(n)
    comp = composite_polynomials(n)
    pair_a = comp.combo1 * comp.quintic + comp.combo2 * comp.negated_quartic
    pair_b = comp.combo1 * comp.quartic + comp.combo3 * comp.negated_quartic
    weight = (n - 2) ** 15
    return (
        weight * (n + 1) ** 2 * pair_b**3,
        -weight * comp.negated_quartic * pair_a * pair_b**2,
        -weight * comp.quintic * pair_a**2 * pair_b,
        weight * comp.quartic * pair_a**3,
    )


def obstruction_sum(n: int) -> AuditRow:
    """Full audit of one dimension, with vanishing values flagged."""
    n = check_dimension(n)
    seeds = base_polynomials(n)
    composites = composite_polynomials(n)
    terms = obstruction_terms(n)
    total = sum(terms)
    notes = []
    if seeds.factored_septic == 0:
        notes.append("factored septic seed vanishes")
    if total == 0:
        notes.append("obstruction sum vanishes")
    return AuditRow(
        n=n,
        seeds=seeds,
        composites=composites,
        terms=terms,
        total=total,
        nonvanishing=total != 0,
        notes=tuple(notes),
    )


def audit_table(dimensions: Iterable[int]) -> list[AuditRow]:
    """Audit several dimensions; deterministic, exact, rerun-stable."""
    return [obstruction_sum(n) for n in dimensions]


def slope_ratio_coefficients(n: int, angle, lam: float, phi_axis: float):
    """Trigonometric coefficients of the slope-candidate ratio.

    Returns (high_num, low_num, high_den, low_den): the candidate slope is
    (high_num * f^(n-1) + low_num) / (high_den * f^n + low_den * f).
    """
    n = check_dimension(n)
    s = np.sin(np.asarray(angle, dtype=float))
    c = np.cos(np.asarray(angle, dtype=float))
    high_num = ((n * n - 7 * n + 14) * lam * s**3
                + (n * n - 8 * n + 17) * phi_axis * s) * c
    low_num = -(n - 7) * (n - 3) * (n - 2) * s**n * c
    high_den = -(lam * (n + 1) * s**2 + (n - 3) * phi_axis) * c
    low_den = (n - 2) * ((n - 3) ** 3 - 4 * (n * n - 6 * n + 10)) * s ** (n - 1) * c
    return high_num, low_num, high_den, low_den


def slope_ratio(n: int, angle, lam: float, phi_axis: float, f):
    """Evaluate the slope candidate; zero denominators are an error."""
    high_num, low_num, high_den, low_den = slope_ratio_coefficients(
        n, angle, lam, phi_axis
    )
    f = np.asarray(f, dtype=float)
    num = high_num * f ** (n - 1) + low_num
    den = high_den * f**n + low_den * f
    scale = float(np.abs(den).max()) if den.size else 0.0
    if np.any(np.abs(den) <= 1e-12 * max(1.0, scale)):
        raise SingularFormulaError("slope-candidate denominator vanishes")
    return num / den


@dataclasses.dataclass(frozen=True)
class RadialCoefficients:
    """Coefficients of the radius-power relation the slope must satisfy.

    The relation reads coeff3 * f^(3(n-1)) + coeff2 * f^(2(n-1))
    + coeff1 * f^(n-1) + coeff0 = 0.
    """

    n: int
    coeff3: np.ndarray
    coeff2: np.ndarray
    coeff1: np.ndarray
    coeff0: np.ndarray

    @property
    def degrees(self) -> tuple[int, int, int, int]:
        return (3 * (self.n - 1), 2 * (self.n - 1), self.n - 1, 0)


def radial_polynomial_coefficients(
    n: int, angle, lam: float, phi_axis: float
) -> RadialCoefficients:
    """Coefficients of the quartic-in-radius-power relation."""
    n = check_dimension(n)
    high_num, low_num, high_den, low_den = slope_ratio_coefficients(
        n, angle, lam, phi_axis
    )
    s = np.sin(np.asarray(angle, dtype=float))
    mix = phi_axis + lam * s**2
    coeff3 = -mix * high_den**2
    coeff2 = (
        (n - 2) * high_den**2 * s ** (n - 1)
        + (n - 3) * (n - 2) * high_num * high_den * s ** (n - 2)
        + (n - 2) * high_num**2 * s ** (n - 3)
        - 2.0 * mix * high_den * low_den
    )
    coeff1 = (
        2.0 * (n - 2) * high_den * low_den * s ** (n - 1)
        + (n - 3) * (n - 2) * (high_num * low_den + low_num * high_den) * s ** (n - 2)
        + 2.0 * (n - 2) * high_num * low_num * s ** (n - 3)
        - mix * low_den**2
    )
    coeff0 = (
        (n - 2) * low_den**2 * s ** (n - 1)
        + (n - 3) * (n - 2) * low_num * low_den * s ** (n - 2)
        + (n - 2) * low_num**2 * s ** (n - 3)
    )
    return RadialCoefficients(
        n=n, coeff3=coeff3, coeff2=coeff2, coeff1=coeff1, coeff0=coeff0
    )
