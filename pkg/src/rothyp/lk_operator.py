"""Second-order curvature operators acting on fields over a rotational chart.

The order-k operator weights the second covariant derivatives along the
principal directions by the order-k Newton-transform diagonal.  The numeric
path uses central finite differences in chart coordinates with the tangential
connection term evaluated analytically; the closed path evaluates the exact
tangential/normal decomposition of the operator on the unit normal field.
"""

from __future__ import annotations

import dataclasses
from typing import Callable

import numpy as np

from .errors import DomainError, InvalidOrderError
from .geometry_core import (
    adapted_frame,
    check_dimension,
    fundamental_forms,
    gauss_map,
    immerse,
    shape_spectrum,
    validate_chart,
)
from .profiles import ProfileCurve, require_unit_speed
from .symfunc import newton_transform, symmetric_derivative, symmetric_table

__all__ = [
    "LkGaussValue",
    "PositionConstantReport",
    "default_step",
    "lk_gauss_closed",
    "lk_gauss_numeric",
    "lk_position_constant",
    "lk_scalar",
]

_MIN_STEP = 1e-9


def _point_jet(profile: ProfileCurve, r: float):
    return profile.jet(np.array([float(r)]))


def default_step(profile: ProfileCurve, r: float, n: int) -> float:
    """Curvature-scaled finite-difference step, clamped to [1e-6, 1e-3]."""
    spectrum = shape_spectrum(_point_jet(profile, r), n)
    scale = max(
        1.0,
        float(np.abs(spectrum.k_meridian[0])),
        float(np.abs(spectrum.k_parallel[0])),
    )
    return float(np.clip(1e-4 / scale, 1e-6, 1e-3))


def _connection(jet, angles: np.ndarray, n: int) -> np.ndarray:
    """Chart-coordinate connection scalars c[i, m] = <M_ii, M_m> / g_mm.

    The tangential part of the ambient second partial along direction i,
    resolved against coordinate direction m.  Projection onto the normal
    drops out because the coordinate tangents are normal-orthogonal.
    """
    m = n - 2
    f = float(jet.f[0])
    fp = float(jet.fp[0])
    fpp = float(jet.fpp[0])
    phip = float(jet.phip[0])
    phipp = float(jet.phipp[0])
    w2 = fp * fp + phip * phip

    tails = np.ones(m)
    for j in range(m - 2, -1, -1):
        tails[j] = tails[j + 1] * np.cos(angles[j + 1])

    conn = np.zeros((n - 1, n - 1))
    conn[0, 0] = (fp * fpp + phip * phipp) / w2
    for j in range(m):
        conn[j + 1, 0] = -f * fp * tails[j] ** 2 / w2
        for q in range(j + 1, m):
            conn[j + 1, q + 1] = np.tan(angles[q]) * tails[j] ** 2 / tails[q] ** 2
    return conn


def _partials(
    values_fn: Callable[[float, np.ndarray], np.ndarray],
    r: float,
    angles: np.ndarray,
    h: float,
):
    center = np.asarray(values_fn(r, angles), dtype=float)
    first = np.empty((angles.size + 1,) + center.shape)
    second = np.empty_like(first)
    plus = np.asarray(values_fn(r + h, angles), dtype=float)
    minus = np.asarray(values_fn(r - h, angles), dtype=float)
    first[0] = (plus - minus) / (2.0 * h)
    second[0] = (plus - 2.0 * center + minus) / h**2
    for j in range(angles.size):
        bumped = angles.copy()
        bumped[j] = angles[j] + h
        plus = np.asarray(values_fn(r, bumped), dtype=float)
        bumped[j] = angles[j] - h
        minus = np.asarray(values_fn(r, bumped), dtype=float)
        first[j + 1] = (plus - minus) / (2.0 * h)
        second[j + 1] = (plus - 2.0 * center + minus) / h**2
    return first, second


def _lk_numeric(
    values_fn: Callable[[float, np.ndarray], np.ndarray],
    profile: ProfileCurve,
    r: float,
    angles: np.ndarray,
    k: int,
    *,
    h: float | None,
    richardson: bool,
) -> np.ndarray:
    angles = validate_chart(angles)
    n = angles.size + 2
    if not 0 <= k <= n - 2:
        raise InvalidOrderError(f"operator order must lie in 0..{n - 2}, got {k}")
    jet = _point_jet(profile, r)
    if h is None:
        h = default_step(profile, r, n)
    if not np.isfinite(h) or h < _MIN_STEP:
        raise DomainError(f"finite-difference step underflow: h = {h!r}")

    spectrum = shape_spectrum(jet, n)
    weights = newton_transform(k, spectrum.principal_values(0)).diagonal
    gdiag = fundamental_forms(jet, angles).first[0]
    conn = _connection(jet, angles, n)

    first, second = _partials(values_fn, r, angles, h)
    if richardson:
        first_half, second_half = _partials(values_fn, r, angles, h / 2.0)
        first = (4.0 * first_half - first) / 3.0
        second = (4.0 * second_half - second) / 3.0

    out = np.zeros(first.shape[1:])
    for i in range(n - 1):
        correction = np.tensordot(conn[i], first, axes=(0, 0))
        out = out + (weights[i] / gdiag[i]) * (second[i] - correction)
    return out


def lk_scalar(
    profile: ProfileCurve,
    r: float,
    angles,
    k: int,
    field: Callable[[float, np.ndarray], float],
    *,
    h: float | None = None,
    richardson: bool = False,
) -> float:
    """Apply the order-k operator to a scalar chart field at one point."""

    def wrapped(rv: float, av: np.ndarray) -> np.ndarray:
        return np.asarray([field(rv, av)], dtype=float)

    angles = np.asarray(angles, dtype=float)
    return float(
        _lk_numeric(wrapped, profile, r, angles, k, h=h, richardson=richardson)[0]
    )


def lk_gauss_numeric(
    profile: ProfileCurve,
    r: float,
    angles,
    k: int,
    *,
    h: float | None = None,
    richardson: bool = False,
) -> np.ndarray:
    """Componentwise numeric operator value on the unit normal field."""
    angles = np.asarray(angles, dtype=float)

    def normal_at(rv: float, av: np.ndarray) -> np.ndarray:
        return gauss_map(profile.jet(np.array([rv])), av)[0]

    return _lk_numeric(normal_at, profile, r, angles, k, h=h, richardson=richardson)


@dataclasses.dataclass(frozen=True)
class LkGaussValue:
    """Closed operator value on the unit normal, split into parts."""

    k: int
    vector: np.ndarray
    tangential_part: np.ndarray
    normal_part: np.ndarray


def lk_gauss_closed(profile: ProfileCurve, r: float, angles, k: int) -> LkGaussValue:
    """Closed-form operator value on the unit normal at one chart point.

    Tangential part: -(d/dr e_{k+1}) along the meridian direction; normal
    part: -(e_1 e_{k+1} - (k+2) e_{k+2}) times the normal.  Requires a
    unit-speed profile.
    """
    angles = validate_chart(angles)
    n = angles.size + 2
    if not 0 <= k <= n - 2:
        raise InvalidOrderError(f"operator order must lie in 0..{n - 2}, got {k}")
    jet = _point_jet(profile, r)
    require_unit_speed(jet)
    table = symmetric_table(shape_spectrum(jet, n))[0]
    s1 = table[1]
    s_next = table[k + 1]
    s_after = table[k + 2] if k + 2 <= n - 1 else 0.0
    rate = float(symmetric_derivative(jet, n, k + 1)[0])

    meridian = adapted_frame(jet, angles)[0, 0]
    normal = gauss_map(jet, angles)[0]
    tangential_part = -rate * meridian
    normal_part = -(s1 * s_next - (k + 2) * s_after) * normal
    return LkGaussValue(
        k=k,
        vector=tangential_part + normal_part,
        tangential_part=tangential_part,
        normal_part=normal_part,
    )


@dataclasses.dataclass(frozen=True)
class PositionConstantReport:
    """Best scalar multiple of the normal matching the operator on position.

    ``constant`` minimizes |L_k x - constant * normal|; ``residual`` is the
    leftover (tangential) norm.  The ratios against the order-k and
    order-(k+1) symmetric functions are reported so the proportionality can
    be read off rather than assumed; ratios with vanishing denominators are
    NaN.
    """

    k: int
    constant: float
    residual: float
    sigma_k: float
    sigma_next: float
    ratio_sigma_k: float
    ratio_sigma_next: float


def lk_position_constant(
    profile: ProfileCurve,
    r: float,
    angles,
    k: int,
    *,
    h: float | None = None,
    richardson: bool = True,
) -> PositionConstantReport:
    """Fit the operator value on the position field against the unit normal."""
    angles = np.asarray(angles, dtype=float)

    def position_at(rv: float, av: np.ndarray) -> np.ndarray:
        return immerse(profile.jet(np.array([rv])), av)[0]

    value = _lk_numeric(position_at, profile, r, angles, k, h=h, richardson=richardson)
    jet = _point_jet(profile, r)
    n = angles.size + 2
    normal = gauss_map(jet, angles)[0]
    constant = float(value @ normal)
    residual = float(np.linalg.norm(value - constant * normal))
    table = symmetric_table(shape_spectrum(jet, n))[0]
    sigma_k = float(table[k])
    sigma_next = float(table[k + 1]) if k + 1 <= n - 1 else 0.0

    def _ratio(denom: float) -> float:
        return constant / denom if abs(denom) > 1e-14 else float("nan")

    return PositionConstantReport(
        k=k,
        constant=constant,
        residual=residual,
        sigma_k=sigma_k,
        sigma_next=sigma_next,
        ratio_sigma_k=_ratio(sigma_k),
        ratio_sigma_next=_ratio(sigma_next),
    )
