"""Charts, frames and curvature data of rotational hypersurfaces.

A rotational hypersurface in Euclidean n-space is swept out by rotating
a profile curve (see profiles.py) about the last coordinate axis.  The
chart uses the profile parameter r plus n-2 rotation angles.  All
pointwise work is delegated to the kernel backend; this module handles
validation, broadcasting over sample grids and the derived curvature
quantities.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from . import _kernels
from .errors import (
    DegenerateChartError,
    InvalidDimensionError,
    SingularProfileError,
)
from .profiles import ProfileJet

__all__ = [
    "check_dimension",
    "parity_sign",
    "unit_direction",
    "rotation_matrix",
    "generalized_cross",
    "immerse",
    "gauss_map",
    "adapted_frame",
    "FundamentalForms",
    "fundamental_forms",
    "CurvatureSpectrum",
    "shape_spectrum",
    "validate_chart",
]


def check_dimension(n) -> int:
    """Validate an ambient dimension; the theory needs n >= 3."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise InvalidDimensionError("ambient dimension must be an integer")
    n = int(n)
    if n < 3:
        raise InvalidDimensionError(f"ambient dimension must be >= 3, got {n}")
    return n


def parity_sign(n) -> int:
    """Orientation sign of the chosen unit normal: -1 for odd n, +1 for even."""
    return -1 if check_dimension(n) % 2 else 1


def _angles_array(angles) -> np.ndarray:
    a = np.atleast_1d(np.asarray(angles, dtype=float))
    if a.ndim != 1 or a.size < 1:
        raise DegenerateChartError("need a 1-d array of at least one angle")
    if not np.all(np.isfinite(a)):
        raise DegenerateChartError("rotation angles must be finite")
    return a


def validate_chart(angles, tol: float = 1e-9) -> np.ndarray:
    """Reject angle tuples where the coordinate chart degenerates.

    The angular metric coefficients carry trailing cosine factors, so
    the chart collapses whenever any cosine past the first angle
    vanishes.  The first angle is unconstrained.
    """
    a = _angles_array(angles)
    if a.size > 1:
        bad = np.abs(np.cos(a[1:])) < tol
        if np.any(bad):
            idx = int(np.flatnonzero(bad)[0]) + 1
            raise DegenerateChartError(
                f"chart degenerates: cos(angle[{idx}]) is within {tol} of 0"
            )
    return a


def unit_direction(angles) -> np.ndarray:
    """Unit vector on the (n-2)-sphere parametrised by the chart angles."""
    return _kernels.unit_direction(_angles_array(angles))


def rotation_matrix(angles) -> np.ndarray:
    """Orthogonal matrix carrying the profile plane to the chart point.

    Column 0 is the rotated radial direction, the last column is the
    fixed axis, and the middle columns complete an orthonormal basis.
    Applying it to (f, 0, ..., 0, phi) reproduces the immersion.
    """
    a = _angles_array(angles)
    n = a.size + 2
    # fp=1, php=0, w=1 turns the frame rows into (u, 0) and the v-columns
    rows = _kernels.frame_rows(1.0, 0.0, 1.0, a)
    mat = np.zeros((n, n))
    for col in range(n - 1):
        mat[:, col] = rows[col]
    mat[n - 1, n - 1] = 1.0
    return mat


def generalized_cross(rows) -> np.ndarray:
    """Vector orthogonal to n-1 given vectors in n-space.

    Cofactor expansion along a symbolic first row of basis vectors;
    for n = 3 this is the ordinary cross product of the two rows.
    """
    mat = np.asarray(rows, dtype=float)
    if mat.ndim != 2 or mat.shape[0] + 1 != mat.shape[1]:
        raise InvalidDimensionError(
            f"need n-1 vectors of length n, got shape {mat.shape}"
        )
    n = mat.shape[1]
    out = np.empty(n)
    cols = np.arange(n)
    for i in range(n):
        minor = mat[:, cols != i]
        out[i] = (-1.0) ** i * np.linalg.det(minor)
    return out


def _check_regular(jet: ProfileJet) -> np.ndarray:
    w = jet.speed
    if np.any(w == 0.0):
        raise SingularProfileError("profile has a stationary point")
    return w


def immerse(jet: ProfileJet, angles) -> np.ndarray:
    """Ambient positions of the chart points, shape (samples, n)."""
    a = _angles_array(angles)
    out = np.empty((len(jet), a.size + 2))
    for i in range(len(jet)):
        out[i] = _kernels.immersion_point(
            float(jet.f[i]), float(jet.phi[i]), a)
    return out


def gauss_map(jet: ProfileJet, angles) -> np.ndarray:
    """Unit normal field along the chart, shape (samples, n)."""
    a = _angles_array(angles)
    n = a.size + 2
    eps = float(parity_sign(n))
    w = _check_regular(jet)
    out = np.empty((len(jet), n))
    for i in range(len(jet)):
        out[i] = _kernels.gauss_point(
            eps, float(jet.fp[i]), float(jet.phip[i]), float(w[i]), a)
    return out


def adapted_frame(jet: ProfileJet, angles) -> np.ndarray:
    """Orthonormal tangent frames, shape (samples, n-1, n).

    Row 0 is the unit meridian tangent; the remaining rows span the
    rotated sphere directions.  Together with the Gauss map this gives
    an orthonormal basis of the ambient space at every sample.
    """
    a = _angles_array(angles)
    n = a.size + 2
    w = _check_regular(jet)
    out = np.empty((len(jet), n - 1, n))
    for i in range(len(jet)):
        out[i] = _kernels.frame_rows(
            float(jet.fp[i]), float(jet.phip[i]), float(w[i]), a)
    return out


@dataclasses.dataclass(frozen=True)
class FundamentalForms:
    """Diagonals of the first and second fundamental forms on a grid."""

    first: np.ndarray
    second: np.ndarray

    @property
    def shape_diagonal(self) -> np.ndarray:
        return self.second / self.first


def fundamental_forms(jet: ProfileJet, angles) -> FundamentalForms:
    a = validate_chart(angles)
    n = a.size + 2
    eps = float(parity_sign(n))
    w = _check_regular(jet)
    k = len(jet)
    first = np.empty((k, n - 1))
    second = np.empty((k, n - 1))
    for i in range(k):
        gi, hi = _kernels.form_diagonals(
            eps, float(jet.f[i]), float(jet.fp[i]), float(jet.fpp[i]),
            float(jet.phip[i]), float(jet.phipp[i]), float(w[i]), a)
        first[i] = gi
        second[i] = hi
    if np.any(first <= 0.0):
        raise DegenerateChartError("metric diagonal must stay positive")
    return FundamentalForms(first, second)


@dataclasses.dataclass(frozen=True)
class CurvatureSpectrum:
    """Principal curvatures along a profile grid.

    The meridian direction carries one curvature; every rotated sphere
    direction carries the same second curvature with multiplicity n-2.
    """

    n: int
    k_meridian: np.ndarray
    k_parallel: np.ndarray

    def principal_values(self, i: int) -> np.ndarray:
        vals = np.full(self.n - 1, self.k_parallel[i])
        vals[0] = self.k_meridian[i]
        return vals

    @property
    def mean(self) -> np.ndarray:
        return (self.k_meridian + (self.n - 2) * self.k_parallel) / (self.n - 1)

    @property
    def gauss_kronecker(self) -> np.ndarray:
        return self.k_meridian * self.k_parallel ** (self.n - 2)


def shape_spectrum(jet: ProfileJet, n) -> CurvatureSpectrum:
    """Principal curvatures of the swept hypersurface along the profile."""
    n = check_dimension(n)
    eps = parity_sign(n)
    w = _check_regular(jet)
    if np.any(jet.f <= 0.0):
        raise SingularProfileError("profile radius must stay positive")
    k_mer = eps * (jet.fpp * jet.phip - jet.fp * jet.phipp) / w**3
    k_par = -eps * jet.phip / (jet.f * w)
    return CurvatureSpectrum(n, k_mer, k_par)
