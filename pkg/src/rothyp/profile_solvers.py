"""Profile constructions: zero-mean-curvature branches, flat families, fixtures.

The zero-mean-curvature solver integrates the graph form of the profile (the
radius as independent variable) and exposes closed-form derivatives through
the conserved quantity f^(n-2) sin R, so curvature checks on the result see
analytic data rather than solver output.  A plain power-series evaluator for
the Gauss hypergeometric function backs the closed expression of the height
coordinate.
"""

from __future__ import annotations

import csv
import dataclasses
import math
from typing import IO, Iterable

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from .classifier import VerdictCase
from .errors import DomainError, SingularFormulaError, SingularProfileError
from .geometry_core import check_dimension, shape_spectrum
from .profiles import (
    CatenaryProfile,
    LineProfile,
    ProfileCurve,
    cone_profile,
    cylinder_profile,
    plane_profile,
    sphere_profile,
)

__all__ = [
    "Fixture",
    "MinimalProfile",
    "MinimalProfileSolution",
    "SeriesValue",
    "fixture_profiles",
    "flat_profile",
    "gauss_hypergeometric",
    "solve_minimal_profile",
]

# Series argument above which convergence is too slow to be useful.
_SERIES_Z_MAX = 0.95
_SERIES_TERM_CAP = 100_000


@dataclasses.dataclass(frozen=True)
class SeriesValue:
    """Partial sum of a hypergeometric series with a crude tail bound."""

    value: float
    tail_bound: float
    terms: int

    def __float__(self) -> float:
        return self.value


def gauss_hypergeometric(a: float, b: float, c: float, z: float) -> SeriesValue:
    """Sum the Gauss hypergeometric series 2F1(a, b; c; z) term by term.

    Terms follow the Pochhammer ratio recurrence and stop once the last term
    drops below 1e-15 of the partial sum (or at the term cap).  Arguments with
    |z| >= 1 and nonpositive-integer lower parameters are rejected.
    """
    if c <= 0.0 and float(c).is_integer():
        raise DomainError(f"lower parameter must not be a nonpositive integer: {c}")
    if not abs(z) < 1.0:
        raise DomainError(f"series needs |z| < 1, got {z}")
    term = 1.0
    total = 1.0
    k = 0
    while k < _SERIES_TERM_CAP:
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        total += term
        k += 1
        if abs(term) < 1e-15 * abs(total):
            break
    tail = abs(term) * abs(z) / (1.0 - abs(z))
    return SeriesValue(value=total, tail_bound=tail, terms=k + 1)


class MinimalProfile(ProfileCurve):
    """Zero-mean-curvature branch with analytic derivatives.

    The conserved quantity c1 * f^(2(n-2)) * sin^2 R = 1 gives every jet
    component in closed form once the radius at a given arclength is known;
    only that inversion uses the dense integrator output.
    """

    family = "minimal"

    def __init__(self, n: int, c1: float, sign: int, f_start: float,
                 f_stop: float, dense, r_end: float) -> None:
        params = {"c1": float(c1), "sign": int(sign),
                  "f_min": float(f_start), "f_max": float(f_stop)}
        super().__init__((0.0, float(r_end)), params, unit_speed=True)
        self.n = int(n)
        self.c1 = float(c1)
        self.sign = int(sign)
        self.f_start = float(f_start)
        self.f_stop = float(f_stop)
        self._dense = dense

    def _radius_at(self, r: float) -> float:
        lo, hi = self.f_start, self.f_stop
        if r <= self._dense(lo)[1]:
            return lo
        if r >= self._dense(hi)[1]:
            return hi
        return brentq(lambda fv: self._dense(fv)[1] - r, lo, hi, xtol=1e-13)

    def _raw_jet(self, r: np.ndarray) -> tuple[np.ndarray, ...]:
        n = self.n
        f = np.array([self._radius_at(rv) for rv in r])
        phi = np.array([self._dense(fv)[0] for fv in f])
        phip = self.sign / (math.sqrt(self.c1) * f ** (n - 2))
        fp = np.sqrt(np.maximum(1.0 - phip**2, 0.0))
        fpp = (n - 2) * (1.0 - fp**2) / f
        phipp = -(n - 2) * phip * fp / f
        fppp = (n - 2) * (-2.0 * fp * fpp * f - (1.0 - fp**2) * fp) / f**2
        phippp = -(n - 2) * ((phipp * fp + phip * fpp) * f - phip * fp**2) / f**2
        return f, fp, fpp, fppp, phi, phip, phipp, phippp


@dataclasses.dataclass(frozen=True)
class MinimalProfileSolution:
    """Zero-mean-curvature branch on a radius window, with its closed form.

    The grid columns are arclength, radius, height and the two curvature
    summaries; arclength is measured from the first integrated radius (from
    the waist when n = 3).  ``c2`` is the height offset making the series
    form of the height match the integrated one.
    """

    n: int
    c1: float
    c2: float
    sign: int
    f_neck: float
    r: np.ndarray
    f: np.ndarray
    phi: np.ndarray
    mean_curv: np.ndarray
    gauss_curv: np.ndarray
    requested_range: tuple[float, float]
    effective_range: tuple[float, float]
    truncated: bool
    hypergeometric_form_available: bool
    curve: ProfileCurve = dataclasses.field(repr=False)

    def profile(self) -> ProfileCurve:
        return self.curve

    def series_phi(self, f_values) -> np.ndarray:
        """Closed-form height via the hypergeometric series.

        Unavailable for n = 3, where the closed expression divides by n - 3
        and the profile is the catenary instead.
        """
        if self.n == 3:
            raise SingularFormulaError(
                "series form divides by n - 3; use the catenary closed form"
            )
        f_values = np.atleast_1d(np.asarray(f_values, dtype=float))
        n = self.n
        out = np.empty_like(f_values)
        upper = (3 * n - 7) / (2.0 * (n - 2))
        lower = (n - 3) / (2.0 * (n - 2))
        for i, fv in enumerate(f_values):
            z = 1.0 / (self.c1 * fv ** (2 * (n - 2)))
            series = gauss_hypergeometric(0.5, lower, upper, z)
            out[i] = (
                -self.sign
                * series.value
                / ((n - 3) * math.sqrt(self.c1) * fv ** (n - 3))
                + self.c2
            )
        return out

    def to_csv(self, target: str | IO[str]) -> None:
        """Write the grid as CSV columns r, f, phi, H, K."""
        own = isinstance(target, str)
        handle = open(target, "w", newline="") if own else target
        try:
            writer = csv.writer(handle)
            writer.writerow(["r", "f", "phi", "H", "K"])
            for row in zip(self.r, self.f, self.phi, self.mean_curv,
                           self.gauss_curv):
                writer.writerow([repr(float(v)) for v in row])
        finally:
            if own:
                handle.close()


def _curvature_columns(profile: ProfileCurve, r: np.ndarray, n: int):
    jet = profile.jet(r)
    spectrum = shape_spectrum(jet, n)
    return jet, spectrum.mean, spectrum.gauss_kronecker


def solve_minimal_profile(
    n: int,
    f_range: tuple[float, float],
    c1: float = 1.0,
    sign: int = 1,
    *,
    grid_points: int = 129,
) -> MinimalProfileSolution:
    """Integrate the zero-mean-curvature profile over a radius window.

    The branch exists only above the waist radius c1^(-1/(2(n-2))); a window
    reaching below it is truncated to the reachable part and reported as
    such rather than rejected.  n = 3 is returned through the catenary
    closed form.
    """
    n = check_dimension(n)
    if sign not in (1, -1):
        raise DomainError(f"branch sign must be +1 or -1, got {sign}")
    if not c1 > 0.0:
        raise DomainError(f"conserved constant must be positive, got {c1}")
    f_lo, f_hi = float(f_range[0]), float(f_range[1])
    if not 0.0 < f_lo < f_hi:
        raise DomainError(f"radius window must be positive and increasing, got {f_range}")
    if grid_points < 2:
        raise DomainError("need at least two grid points")

    f_neck = c1 ** (-1.0 / (2.0 * (n - 2)))

    if n == 3:
        waist = f_neck
        truncated = f_lo <= waist * (1.0 + 1e-12)
        start = waist if truncated else f_lo
        if f_hi <= start * (1.0 + 1e-12):
            raise DomainError(
                f"radius window [{f_lo}, {f_hi}] lies below the waist {waist}"
            )
        r_lo = math.sqrt(max(f_lo**2 - waist**2, 0.0))
        r_hi = math.sqrt(f_hi**2 - waist**2)
        curve = CatenaryProfile(waist, domain=(r_lo, r_hi))
        r_grid = np.linspace(r_lo, r_hi, grid_points)
        jet, mean_curv, gauss_curv = _curvature_columns(curve, r_grid, n)
        phi = sign * jet.phi
        if sign < 0:
            curve = _FlippedCatenary(waist, domain=(r_lo, r_hi))
        return MinimalProfileSolution(
            n=n, c1=c1, c2=0.0, sign=sign, f_neck=waist,
            r=r_grid, f=jet.f, phi=phi,
            mean_curv=mean_curv, gauss_curv=gauss_curv,
            requested_range=(f_lo, f_hi), effective_range=(start, f_hi),
            truncated=truncated, hypergeometric_form_available=False,
            curve=curve,
        )

    truncated = f_lo <= f_neck * (1.0 + 1e-9)
    start = f_neck * (1.0 + 1e-6) if truncated else f_lo
    if f_hi <= start * (1.0 + 1e-9):
        raise DomainError(
            f"radius window [{f_lo}, {f_hi}] lies below the waist {f_neck}"
        )

    root_c1 = math.sqrt(c1)

    def rhs(fv: float, _y) -> list[float]:
        den = math.sqrt(c1 * fv ** (2 * (n - 2)) - 1.0)
        return [sign / den, root_c1 * fv ** (n - 2) / den]

    sol = solve_ivp(rhs, (start, f_hi), [0.0, 0.0], method="RK45",
                    rtol=1e-10, atol=1e-10, dense_output=True)
    if not sol.success:  # pragma: no cover - smooth rhs on a safe window
        raise SingularProfileError(f"profile quadrature failed: {sol.message}")

    r_end = float(sol.sol(f_hi)[1])
    curve = MinimalProfile(n, c1, sign, start, f_hi, sol.sol, r_end)
    f_grid = np.linspace(start, f_hi, grid_points)
    states = sol.sol(f_grid)
    phi_grid = states[0]
    r_grid = states[1]
    _, mean_curv, gauss_curv = _curvature_columns(curve, r_grid, n)

    z_hi = 1.0 / (c1 * f_hi ** (2 * (n - 2)))
    series = gauss_hypergeometric(0.5, (n - 3) / (2.0 * (n - 2)),
                                  (3 * n - 7) / (2.0 * (n - 2)), z_hi)
    leading = -sign * series.value / ((n - 3) * root_c1 * f_hi ** (n - 3))
    c2 = float(phi_grid[-1] - leading)
    z_grid = 1.0 / (c1 * f_grid ** (2 * (n - 2)))
    available = bool(np.any(z_grid <= _SERIES_Z_MAX))

    return MinimalProfileSolution(
        n=n, c1=c1, c2=c2, sign=sign, f_neck=f_neck,
        r=r_grid, f=f_grid, phi=phi_grid,
        mean_curv=mean_curv, gauss_curv=gauss_curv,
        requested_range=(f_lo, f_hi), effective_range=(start, f_hi),
        truncated=truncated, hypergeometric_form_available=available,
        curve=curve,
    )


class _FlippedCatenary(CatenaryProfile):
    """Catenary branch descending in height; used for the sign=-1 branch."""

    def _raw_jet(self, r: np.ndarray) -> tuple[np.ndarray, ...]:
        f, fp, fpp, fppp, phi, phip, phipp, phippp = super()._raw_jet(r)
        return f, fp, fpp, fppp, -phi, -phip, -phipp, -phippp


def flat_profile(kind: str, c1: float, c2: float = 0.0,
                 domain: tuple[float, float] | None = None) -> LineProfile:
    """One of the two flat generating families over f = r.

    ``horizontal`` keeps the height at c2; ``affine`` uses height c1 * r + c2,
    so the affine family with c1 = 0 reduces to the horizontal one.
    """
    label = str(kind).strip().lower()
    window = domain if domain is not None else (0.3, 2.3)
    if window[0] < 0.0:
        raise DomainError("flat families need r >= 0")
    if label == "horizontal":
        return LineProfile(0.0, float(c2), 1.0, 0.0, window)
    if label == "affine":
        return LineProfile(0.0, float(c2), 1.0, float(c1), window)
    raise DomainError(f"flat family kind must be horizontal or affine, got {kind!r}")


@dataclasses.dataclass(frozen=True)
class Fixture:
    """Named model profile with the verdict it should classify to."""

    name: str
    profile: ProfileCurve
    expected: VerdictCase


def fixture_profiles(n: int) -> dict[str, Fixture]:
    """The five model fixtures used by the classification checks.

    All are unit-speed and keep a margin away from the axis and from
    turning points.  The fifth is the zero-mean-curvature branch: the
    catenary for n = 3, the integrated branch above the waist otherwise.
    """
    n = check_dimension(n)
    rho = 0.8
    if n == 3:
        bowl = CatenaryProfile(0.9, domain=(-1.1, 1.1))
    else:
        bowl = solve_minimal_profile(n, (1.05, 2.1), c1=1.0).profile()
    return {
        "plane": Fixture("plane", plane_profile(0.6, (0.35, 2.35)),
                         VerdictCase.HYPERPLANE),
        "cylinder": Fixture("cylinder", cylinder_profile(0.8, (-1.0, 1.0)),
                            VerdictCase.CIRCULAR_HYPERCYLINDER),
        "cone": Fixture("cone", cone_profile(0.6, (0.45, 2.45)),
                        VerdictCase.RIGHT_CIRCULAR_HYPERCONE),
        "sphere": Fixture(
            "sphere",
            sphere_profile(rho, (0.1 * rho, math.pi * rho - 0.1 * rho)),
            VerdictCase.HYPERSPHERE,
        ),
        "catenoid": Fixture("catenoid", bowl, VerdictCase.NOT_EIGEN),
    }


def fixture_expectations(n: int) -> dict[str, str]:
    """Expected verdict labels keyed by fixture name."""
    return {name: fx.expected.label for name, fx in fixture_profiles(n).items()}
