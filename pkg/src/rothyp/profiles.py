"""Generating curves for rotational hypersurfaces.

Every curve here is a planar map r -> (f(r), phi(r)).  f is the distance
to the rotation axis and must stay positive on the sampled range; phi is
the height along the axis.  The geometry layer only ever consumes the
first three derivatives of both coordinates, packed in a ProfileJet, so
each family just has to produce that jet accurately.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Sequence

import numpy as np
from numpy.polynomial import Polynomial
from scipy.integrate import solve_ivp

from .errors import DomainError, SingularProfileError, UnitSpeedError

__all__ = [
    "ProfileJet",
    "ProfileCurve",
    "LineProfile",
    "CircleProfile",
    "CatenaryProfile",
    "TurningAngleProfile",
    "plane_profile",
    "cylinder_profile",
    "cone_profile",
    "sphere_profile",
    "turning_angle",
    "turning_rates",
    "require_unit_speed",
]


@dataclasses.dataclass(frozen=True)
class ProfileJet:
    """Profile coordinates and their first three r-derivatives on a grid."""

    r: np.ndarray
    f: np.ndarray
    fp: np.ndarray
    fpp: np.ndarray
    fppp: np.ndarray
    phi: np.ndarray
    phip: np.ndarray
    phipp: np.ndarray
    phippp: np.ndarray

    @property
    def speed(self) -> np.ndarray:
        return np.hypot(self.fp, self.phip)

    def __len__(self) -> int:
        return self.r.size


def require_unit_speed(jet: ProfileJet, tol: float = 1e-9) -> None:
    worst = float(np.max(np.abs(jet.speed**2 - 1.0)))
    if worst > tol:
        raise UnitSpeedError(
            f"curve is not unit speed: max |f'^2 + phi'^2 - 1| = {worst:.3e}"
        )


def turning_angle(jet: ProfileJet) -> np.ndarray:
    """Angle of the profile tangent against the radial axis."""
    return np.arctan2(jet.phip, jet.fp)


def turning_rates(jet: ProfileJet) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Turning angle with its first two arclength derivatives.

    Works for any regular parametrisation; the rates are taken with
    respect to arclength, which is what every curvature formula wants.
    """
    w2 = jet.fp**2 + jet.phip**2
    if np.any(w2 == 0.0):
        raise SingularProfileError("profile has a stationary point")
    angle = np.arctan2(jet.phip, jet.fp)
    num = jet.fp * jet.phipp - jet.fpp * jet.phip
    rate = num / w2**1.5
    num_d = jet.fp * jet.phippp - jet.fppp * jet.phip
    half_w2_d = jet.fp * jet.fpp + jet.phip * jet.phipp
    rate2 = num_d / w2**2 - 3.0 * num * half_w2_d / w2**3
    return angle, rate, rate2


class ProfileCurve:
    """Base class: domain handling plus positivity checks around _raw_jet."""

    family: str = "abstract"

    def __init__(
        self,
        domain: tuple[float, float],
        params: dict,
        unit_speed: bool,
    ) -> None:
        r0, r1 = float(domain[0]), float(domain[1])
        if not math.isfinite(r0) or not math.isfinite(r1) or not r0 < r1:
            raise DomainError(f"invalid parameter interval ({r0}, {r1})")
        self.domain = (r0, r1)
        self.params = dict(params)
        self.unit_speed = bool(unit_speed)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        inner = ", ".join(f"{k}={v!r}" for k, v in self.params.items())
        return f"{type(self).__name__}({inner}, domain={self.domain})"

    def _raw_jet(self, r: np.ndarray) -> tuple[np.ndarray, ...]:
        raise NotImplementedError

    def jet(self, r, *, check_domain: bool = True) -> ProfileJet:
        arr = np.atleast_1d(np.asarray(r, dtype=float))
        if arr.ndim != 1:
            raise DomainError("sample points must form a 1-d array")
        if check_domain:
            r0, r1 = self.domain
            slack = 1e-12 * max(1.0, abs(r0), abs(r1))
            if np.any(arr < r0 - slack) or np.any(arr > r1 + slack):
                raise DomainError(
                    f"sample outside parameter interval [{r0}, {r1}]"
                )
        f, fp, fpp, fppp, phi, phip, phipp, phippp = self._raw_jet(arr)
        if np.any(f <= 0.0):
            raise SingularProfileError(
                "profile radius must stay positive on the sampled range"
            )
        return ProfileJet(arr, f, fp, fpp, fppp, phi, phip, phipp, phippp)

    def grid(self, count: int) -> np.ndarray:
        """Uniform sample points strictly inside the domain."""
        if count < 1:
            raise DomainError("grid needs at least one point")
        r0, r1 = self.domain
        k = np.arange(1, count + 1, dtype=float)
        return r0 + (r1 - r0) * k / (count + 1)

    def __call__(self, r) -> tuple[np.ndarray, np.ndarray]:
        j = self.jet(r)
        return j.f, j.phi


class LineProfile(ProfileCurve):
    """Straight generating line  (f0 + r*df, phi0 + r*dphi).

    Covers hyperplanes (df=1, dphi=0), round cylinders (df=0, dphi=1)
    and round cones (both components nonzero) in one evaluator.
    """

    family = "line"

    def __init__(
        self,
        f0: float,
        phi0: float,
        df: float,
        dphi: float,
        domain: tuple[float, float],
    ) -> None:
        norm = math.hypot(df, dphi)
        if norm == 0.0:
            raise DomainError("line direction must be nonzero")
        params = {"f0": float(f0), "phi0": float(phi0),
                  "df": float(df), "dphi": float(dphi)}
        super().__init__(domain, params, unit_speed=abs(norm - 1.0) <= 1e-12)
        self.f0, self.phi0, self.df, self.dphi = (
            params["f0"], params["phi0"], params["df"], params["dphi"])

    def _raw_jet(self, r: np.ndarray) -> tuple[np.ndarray, ...]:
        zero = np.zeros_like(r)
        f = self.f0 + self.df * r
        phi = self.phi0 + self.dphi * r
        fp = np.full_like(r, self.df)
        phip = np.full_like(r, self.dphi)
        return f, fp, zero, zero, phi, phip, zero, zero


class CircleProfile(ProfileCurve):
    """Arc of a circle of the given radius, unit speed.

    With the centre on the rotation axis (center_f = 0) the swept
    hypersurface is a round hypersphere; off-axis centres give the
    torus-like profiles used in counterexample hunting.
    """

    family = "circle"

    def __init__(
        self,
        radius: float,
        center_f: float = 0.0,
        center_phi: float = 0.0,
        phase: float = 0.0,
        domain: tuple[float, float] | None = None,
    ) -> None:
        radius = float(radius)
        if radius <= 0.0:
            raise DomainError("circle radius must be positive")
        if domain is None:
            # widest arc with f > 0 for an on-axis centre, minus a margin
            domain = (0.05 * math.pi * radius, 0.95 * math.pi * radius)
        params = {"radius": radius, "center_f": float(center_f),
                  "center_phi": float(center_phi), "phase": float(phase)}
        super().__init__(domain, params, unit_speed=True)
        self.radius = radius
        self.center_f = params["center_f"]
        self.center_phi = params["center_phi"]
        self.phase = params["phase"]

    def _raw_jet(self, r: np.ndarray) -> tuple[np.ndarray, ...]:
        rho = self.radius
        t = r / rho + self.phase
        s, c = np.sin(t), np.cos(t)
        f = self.center_f + rho * s
        phi = self.center_phi - rho * c
        return (f, c, -s / rho, -c / rho**2,
                phi, s, c / rho, -s / rho**2)


class CatenaryProfile(ProfileCurve):
    """Unit-speed catenary f = sqrt(a^2 + r^2), phi = a*asinh(r/a).

    This is the generating curve of the n = 3 minimal rotational
    surface; the waist parameter a is the smallest radius.
    """

    family = "catenary"

    def __init__(self, waist: float, domain: tuple[float, float]) -> None:
        waist = float(waist)
        if waist <= 0.0:
            raise DomainError("catenary waist must be positive")
        super().__init__(domain, {"waist": waist}, unit_speed=True)
        self.waist = waist

    def _raw_jet(self, r: np.ndarray) -> tuple[np.ndarray, ...]:
        a = self.waist
        u = a * a + r * r
        root = np.sqrt(u)
        f = root
        fp = r / root
        fpp = a * a * u**-1.5
        fppp = -3.0 * a * a * r * u**-2.5
        phi = a * np.arcsinh(r / a)
        phip = a / root
        phipp = -a * r * u**-1.5
        phippp = a * (2.0 * r * r - a * a) * u**-2.5
        return f, fp, fpp, fppp, phi, phip, phipp, phippp


class TurningAngleProfile(ProfileCurve):
    """Unit-speed curve built from a prescribed tangent angle.

    The angle is a polynomial in r plus optional sinusoidal terms; the
    coordinates come from integrating (cos, sin) of it with a dense
    high-order ODE solution, so f and phi are accurate to ~1e-12 while
    every derivative is analytic.
    """

    family = "turning_angle"

    def __init__(
        self,
        poly: Sequence[float],
        fourier: Sequence[tuple[float, float, float]] = (),
        f_ref: float = 1.0,
        phi_ref: float = 0.0,
        r_ref: float | None = None,
        domain: tuple[float, float] = (0.0, 1.0),
    ) -> None:
        poly = [float(c) for c in poly]
        if not poly:
            raise DomainError("need at least a constant angle coefficient")
        fourier = [(float(a), float(b), float(w)) for a, b, w in fourier]
        if r_ref is None:
            r_ref = domain[0]
        r_ref = float(r_ref)
        params = {"poly": poly, "fourier": fourier, "f_ref": float(f_ref),
                  "phi_ref": float(phi_ref), "r_ref": r_ref}
        super().__init__(domain, params, unit_speed=True)
        r0, r1 = self.domain
        if not r0 <= r_ref <= r1:
            raise DomainError("reference point must lie in the domain")
        self._P = Polynomial(poly)
        self._Pd = self._P.deriv()
        self._Pdd = self._Pd.deriv()
        self._fourier = fourier
        self._f_ref = float(f_ref)
        self._phi_ref = float(phi_ref)
        self._r_ref = r_ref
        self._dense = None

    def angle_jet(self, r: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        ang = self._P(r)
        ang_d = self._Pd(r)
        ang_dd = self._Pdd(r)
        for amp_s, amp_c, freq in self._fourier:
            s, c = np.sin(freq * r), np.cos(freq * r)
            ang = ang + amp_s * s + amp_c * c
            ang_d = ang_d + freq * (amp_s * c - amp_c * s)
            ang_dd = ang_dd - freq * freq * (amp_s * s + amp_c * c)
        return ang, ang_d, ang_dd

    def _solution(self):
        if self._dense is None:
            r0, r1 = self.domain

            def rhs(r, _y):
                ang = self.angle_jet(np.asarray([r]))[0][0]
                return [math.cos(ang), math.sin(ang)]

            sol = solve_ivp(rhs, (r0, r1), [0.0, 0.0], method="DOP853",
                            dense_output=True, rtol=1e-12, atol=1e-14)
            if not sol.success:  # pragma: no cover - DOP853 on smooth rhs
                raise SingularProfileError(
                    f"coordinate quadrature failed: {sol.message}")
            base = sol.sol(self._r_ref)
            self._dense = (sol.sol, base[0], base[1])
        return self._dense

    def _raw_jet(self, r: np.ndarray) -> tuple[np.ndarray, ...]:
        dense, base_f, base_phi = self._solution()
        ang, ang_d, ang_dd = self.angle_jet(r)
        s, c = np.sin(ang), np.cos(ang)
        vals = dense(r)
        f = self._f_ref + (vals[0] - base_f)
        phi = self._phi_ref + (vals[1] - base_phi)
        fp, phip = c, s
        fpp = -s * ang_d
        phipp = c * ang_d
        fppp = -c * ang_d**2 - s * ang_dd
        phippp = -s * ang_d**2 + c * ang_dd
        return f, fp, fpp, fppp, phi, phip, phipp, phippp


def plane_profile(height: float = 0.0,
                  domain: tuple[float, float] = (0.1, 2.1)) -> LineProfile:
    """Radial line at fixed height: the rotation sweeps out a hyperplane."""
    if domain[0] < 0.0:
        raise DomainError("hyperplane profile needs r >= 0")
    return LineProfile(0.0, height, 1.0, 0.0, domain)


def cylinder_profile(radius: float,
                     domain: tuple[float, float] = (-1.0, 1.0)) -> LineProfile:
    """Vertical line at fixed radius: a round hypercylinder."""
    if radius <= 0.0:
        raise DomainError("cylinder radius must be positive")
    return LineProfile(radius, 0.0, 0.0, 1.0, domain)


def cone_profile(aperture: float,
                 domain: tuple[float, float] = (0.2, 2.2)) -> LineProfile:
    """Slanted line through the origin; aperture is the half-opening angle."""
    if not 0.0 < aperture < 0.5 * math.pi:
        raise DomainError("cone aperture must lie in (0, pi/2)")
    if domain[0] <= 0.0:
        raise DomainError("cone profile needs r > 0 away from the apex")
    return LineProfile(0.0, 0.0, math.sin(aperture), math.cos(aperture), domain)


def sphere_profile(radius: float,
                   domain: tuple[float, float] | None = None) -> CircleProfile:
    """Meridian arc of a round hypersphere of the given radius."""
    return CircleProfile(radius, center_f=0.0, center_phi=0.0, phase=0.0,
                         domain=domain)
