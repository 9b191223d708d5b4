"""Eigen-matrix fitting and verdicts for rotational hypersurfaces.

Given sampled pairs (normal, operator-on-normal) the fit recovers the best
constant matrix sending one to the other; the classifier combines that fit
with direct curvature measurements to sort a profile into one of the model
families.  The verdict tree is geometry-first: flatness, straightness and
umbilicity are decided from the measured spectrum, and the fitted matrix is
kept as diagnostics alongside the verdict.
"""

from __future__ import annotations

import dataclasses
import enum
from typing import Mapping

import numpy as np

from .errors import DomainError, InvalidDimensionError, UnderdeterminedFitError
from .geometry_core import check_dimension, gauss_map, parity_sign, shape_spectrum
from .lk_operator import lk_gauss_closed
from .profiles import ProfileCurve, ProfileJet, turning_rates
from .symfunc import symmetric_derivative, symmetric_table

__all__ = [
    "ClassificationVerdict",
    "EigenMatrixCandidate",
    "Tolerances",
    "VerdictCase",
    "classify",
    "eigen_residual_decomposition",
    "fit_eigen_matrix",
    "hypersphere_fitted_matrix",
    "hypersphere_matrix",
]

# Umbilicity and radius-consistency cutoff used by the verdict tree.
_UMBILIC_TOL = 1e-6
# Straight-profile cutoff on the turning-angle rate.
_STRAIGHT_TOL = 1e-8


class VerdictCase(enum.Enum):
    """Model families a profile can be sorted into."""

    HYPERPLANE = "Hyperplane"
    CIRCULAR_HYPERCYLINDER = "CircularHypercylinder"
    RIGHT_CIRCULAR_HYPERCONE = "RightCircularHypercone"
    HYPERSPHERE = "Hypersphere"
    NOT_EIGEN = "NotEigen"
    UNCLASSIFIABLE = "Unclassifiable"

    @property
    def label(self) -> str:
        return self.value


@dataclasses.dataclass(frozen=True)
class Tolerances:
    """Cutoffs used by :func:`classify`.

    ``fit`` bounds the scale-normalized fit residual, ``flat`` the largest
    Gauss-Kronecker value, ``minimal`` the largest mean curvature and
    ``constancy`` the relative range of quantities required constant.
    """

    fit: float = 1e-6
    flat: float = 1e-8
    minimal: float = 1e-8
    constancy: float = 1e-7


@dataclasses.dataclass(frozen=True)
class EigenMatrixCandidate:
    """Least-squares matrix relating sampled normals to operator values.

    ``eta`` and ``phi_axis`` are the ring and axis diagonal entries when the
    matrix is diagonal within tolerance, else NaN; ``lam`` is their
    difference phi_axis - eta.
    """

    matrix: np.ndarray
    residual: float
    residual_rel: float
    eta: float
    phi_axis: float
    lam: float
    diagonal_ok: bool
    rank_deficient: bool


def fit_eigen_matrix(
    gauss_values,
    operator_values,
    *,
    allow_rank_deficient: bool = False,
    rank_rtol: float = 1e-10,
) -> EigenMatrixCandidate:
    """Fit A minimizing the summed squared error of A g - l over samples.

    Inputs are (samples, n) arrays of unit normals and operator values taken
    at angle-varied chart points.  A rank-deficient normal Gram matrix raises
    :class:`UnderdeterminedFitError` naming the deficient directions unless
    ``allow_rank_deficient`` selects the minimum-norm solution.
    """
    g = np.asarray(gauss_values, dtype=float)
    l_vals = np.asarray(operator_values, dtype=float)
    if g.ndim != 2 or g.shape != l_vals.shape:
        raise DomainError(
            f"need matching (samples, n) arrays, got {g.shape} and {l_vals.shape}"
        )
    count, n = g.shape
    if n < 3:
        raise InvalidDimensionError(f"ambient dimension must be >= 3, got {n}")
    if count < n * (n + 1):
        raise DomainError(
            f"need at least n(n+1) = {n * (n + 1)} sample pairs, got {count}"
        )

    gram = g.T @ g
    cross = l_vals.T @ g
    eigvals, eigvecs = np.linalg.eigh(gram)
    cutoff = rank_rtol * float(eigvals[-1])
    deficient = eigvecs[:, eigvals <= cutoff]
    rank_deficient = deficient.shape[1] > 0
    if rank_deficient and not allow_rank_deficient:
        raise UnderdeterminedFitError(
            f"normal samples span only {n - deficient.shape[1]} of {n} directions",
            deficient_directions=deficient.T.copy(),
        )
    if rank_deficient:
        matrix = cross @ np.linalg.pinv(gram, rcond=max(rank_rtol, 1e-15), hermitian=True)
    else:
        matrix = np.linalg.solve(gram, cross.T).T

    misfit = g @ matrix.T - l_vals
    residual = float(np.sqrt(np.mean(np.sum(misfit**2, axis=1))))
    scale = float(np.sqrt(np.mean(np.sum(l_vals**2, axis=1))))
    residual_rel = residual / max(1.0, scale)

    diag = np.diag(matrix)
    off_mass = float(np.abs(matrix - np.diag(diag)).max())
    mat_scale = max(1.0, float(np.abs(diag).max()))
    ring = diag[: n - 1]
    ring_spread = float(ring.max() - ring.min())
    diagonal_ok = off_mass <= 1e-6 * mat_scale and ring_spread <= 1e-6 * mat_scale
    if diagonal_ok:
        eta = float(ring.mean())
        phi_axis = float(diag[-1])
        lam = phi_axis - eta
    else:
        eta = phi_axis = lam = float("nan")
    return EigenMatrixCandidate(
        matrix=matrix,
        residual=residual,
        residual_rel=residual_rel,
        eta=eta,
        phi_axis=phi_axis,
        lam=lam,
        diagonal_ok=diagonal_ok,
        rank_deficient=rank_deficient,
    )


def hypersphere_matrix(radius: float, n: int) -> np.ndarray:
    """Claimed eigen-matrix of a radius-rho hypersphere: sign * rho^-n * Id."""
    n = check_dimension(n)
    if not radius > 0:
        raise DomainError(f"radius must be positive, got {radius}")
    return parity_sign(n) * radius ** (-n) * np.eye(n)


def hypersphere_fitted_matrix(radius: float, n: int) -> np.ndarray:
    """Eigen-matrix a radius-rho hypersphere actually realizes under the fit.

    The operator on the normal is a pure normal multiple there, with scalar
    sign * (n-1) * (n-2) * rho^(1-n); the claimed value differs by a factor
    (n-1)(n-2) rho except where the two coincide.
    """
    n = check_dimension(n)
    if not radius > 0:
        raise DomainError(f"radius must be positive, got {radius}")
    return parity_sign(n) * (n - 1) * (n - 2) * radius ** (1 - n) * np.eye(n)


def eigen_residual_decomposition(
    candidate: EigenMatrixCandidate, jet: ProfileJet, n: int
) -> tuple[float, float]:
    """Max defects of the two diagonal-reduction scalar equations.

    Tangential: d/dr e_{n-2} = sign * lam * sin R cos R.  Normal:
    e_1 e_{n-2} - (n-1) e_{n-1} = lam sin^2 R - phi_axis.  Both vanish along
    an exact eigen profile with the fitted diagonal entries.
    """
    n = check_dimension(n)
    eps = float(parity_sign(n))
    lam = candidate.lam
    phi_axis = candidate.phi_axis
    s = jet.phip / jet.speed
    c = jet.fp / jet.speed
    rate = symmetric_derivative(jet, n, n - 2)
    tangential = float(np.abs(rate - eps * lam * s * c).max())
    table = symmetric_table(shape_spectrum(jet, n))
    lhs = table[:, 1] * table[:, n - 2] - (n - 1) * table[:, n - 1]
    normal = float(np.abs(lhs - (lam * s**2 - phi_axis)).max())
    return tangential, normal


def _rel_range(values: np.ndarray) -> float:
    scale = max(1.0, float(np.abs(values).max()))
    return float((values.max() - values.min()) / scale)


@dataclasses.dataclass(frozen=True)
class ClassificationVerdict:
    """Outcome of :func:`classify` with its evidence."""

    case: VerdictCase
    candidate: EigenMatrixCandidate
    diagnostics: Mapping[str, float]
    tolerances: Tolerances
    n: int

    @property
    def label(self) -> str:
        return self.case.label


def _sample_angles(rng: np.random.Generator, count: int, n: int) -> np.ndarray:
    angles = rng.uniform(-1.25, 1.25, size=(count, n - 2))
    angles[:, 0] = rng.uniform(-np.pi, np.pi, size=count)
    return angles


def classify(
    profile: ProfileCurve,
    n: int,
    tolerances: Tolerances | None = None,
    *,
    samples: int = 64,
    seed: int = 0,
) -> ClassificationVerdict:
    """Sort a unit-speed profile into a model family.

    The profile is sampled at ``samples`` interior points (at least 40) with
    seeded random chart angles; curvature measurements drive the verdict and
    the minimum-norm eigen-matrix fit is attached for diagnostics.  Tolerance
    conflicts surface as the explicit unclassifiable verdict, never as a
    silent fallback onto one of the families.
    """
    n = check_dimension(n)
    tol = tolerances or Tolerances()
    if samples < 40:
        raise DomainError(f"need at least 40 sample points, got {samples}")
    rng = np.random.default_rng(seed)

    grid = profile.grid(samples)
    jet = profile.jet(grid)
    spectrum = shape_spectrum(jet, n)
    mean_curv = spectrum.mean
    gauss_curv = spectrum.gauss_kronecker
    _, rate, _ = turning_rates(jet)
    table = symmetric_table(spectrum)

    angle_sets = _sample_angles(rng, samples, n)
    normals = np.empty((samples, n))
    operator_values = np.empty((samples, n))
    for i, r in enumerate(grid):
        normals[i] = gauss_map(profile.jet(np.array([r])), angle_sets[i])[0]
        operator_values[i] = lk_gauss_closed(profile, r, angle_sets[i], n - 3).vector
    candidate = fit_eigen_matrix(normals, operator_values, allow_rank_deficient=True)

    flat = float(np.abs(gauss_curv).max()) < tol.flat
    minimal = float(np.abs(mean_curv).max()) < tol.minimal
    straight = float(np.abs(rate).max()) < _STRAIGHT_TOL
    kp_scale = max(1.0, float(np.abs(spectrum.k_parallel).max()))
    umbilic_defect = float(
        np.abs(spectrum.k_meridian - spectrum.k_parallel).max() / kp_scale
    )

    diagnostics: dict[str, float] = {
        "flat_defect": float(np.abs(gauss_curv).max()),
        "minimal_defect": float(np.abs(mean_curv).max()),
        "mean_rel_range": _rel_range(mean_curv),
        "gauss_rel_range": _rel_range(gauss_curv),
        "penultimate_rel_range": _rel_range(table[:, n - 2]),
        "straightness": float(np.abs(rate).max()),
        "umbilic_defect": umbilic_defect,
        "sphere_radius": float("nan"),
        "radius_consistency": float("nan"),
        "fit_residual": candidate.residual,
        "fit_residual_rel": candidate.residual_rel,
        "det_fitted": float(np.linalg.det(candidate.matrix)),
    }
    tangential_defect, normal_defect = eigen_residual_decomposition(candidate, jet, n)
    diagnostics["tangential_defect"] = tangential_defect
    diagnostics["normal_defect"] = normal_defect

    case = _decide(jet, spectrum, tol, diagnostics, flat, minimal, straight)
    return ClassificationVerdict(
        case=case,
        candidate=candidate,
        diagnostics=diagnostics,
        tolerances=tol,
        n=n,
    )


def _decide(
    jet: ProfileJet,
    spectrum,
    tol: Tolerances,
    diagnostics: dict[str, float],
    flat: bool,
    minimal: bool,
    straight: bool,
) -> VerdictCase:
    if flat and minimal:
        return VerdictCase.HYPERPLANE
    if flat:
        if not straight:
            return VerdictCase.UNCLASSIFIABLE
        speed = jet.speed
        cos_r = jet.fp / speed
        sin_r = jet.phip / speed
        if float(np.abs(cos_r).max()) < 1e-8:
            return VerdictCase.CIRCULAR_HYPERCYLINDER
        if float(np.abs(cos_r).min()) > 1e-8 and float(np.abs(sin_r).min()) > 1e-8:
            return VerdictCase.RIGHT_CIRCULAR_HYPERCONE
        return VerdictCase.UNCLASSIFIABLE
    umbilic = diagnostics["umbilic_defect"] < _UMBILIC_TOL
    constant = (
        diagnostics["mean_rel_range"] < tol.constancy
        and diagnostics["gauss_rel_range"] < tol.constancy
    )
    if umbilic and constant:
        radius = float(np.mean(1.0 / np.abs(spectrum.k_parallel)))
        diagnostics["sphere_radius"] = radius
        consistency = float(np.abs(np.abs(spectrum.k_meridian) * radius - 1.0).max())
        diagnostics["radius_consistency"] = consistency
        if consistency > _UMBILIC_TOL:
            return VerdictCase.UNCLASSIFIABLE
        return VerdictCase.HYPERSPHERE
    if umbilic != constant:
        # curvature ratio and constancy disagree: surface it, do not default
        return VerdictCase.UNCLASSIFIABLE
    return VerdictCase.NOT_EIGEN
