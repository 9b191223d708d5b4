"""Symmetric functions of the principal curvatures along a rotational profile.

Three layers live here:

* generic elementary/reduced symmetric functions and the Newton transforms
  of an arbitrary multiset of principal values,
* the turning-angle closed forms of the curvature symmetric functions along
  a unit-speed profile, together with the measured sign flags relating the
  printed table to its reference spectrum,
* the radial derivative of the next-to-top symmetric function, both as a
  regular analytic expression and as the literal power-of-sine formula.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from . import _kernels
from .errors import (
    InvalidOrderError,
    SingularFormulaError,
)
from .geometry_core import CurvatureSpectrum, check_dimension, parity_sign, shape_spectrum
from .profiles import ProfileJet, require_unit_speed, turning_rates

__all__ = [
    "ClosedFormTable",
    "NewtonTransform",
    "PenultimateGradient",
    "closed_symmetric_functions",
    "elementary_symmetric",
    "elementary_symmetric_table",
    "newton_transform",
    "penultimate_gradient",
    "reduced_symmetric",
    "reduced_table",
    "symmetric_derivative",
    "symmetric_table",
]

# Reference-point floor used when measuring sign flags: below this the printed
# and reference values are both numerically indistinguishable from zero.
_FLAG_FLOOR = 1e-8


def _binomial(total: int, taken: int) -> int:
    if taken < 0 or taken > total:
        return 0
    return math.comb(total, taken)


def _values_array(values) -> np.ndarray:
    out = np.asarray(values, dtype=float)
    if out.ndim != 1:
        raise InvalidOrderError("expected a one-dimensional multiset of principal values")
    return out


def elementary_symmetric(order: int, values) -> float:
    """Elementary symmetric function of ``values`` of the given order.

    Orders beyond the multiset size give 0; negative orders are rejected.
    """
    if order < 0:
        raise InvalidOrderError(f"symmetric function order must be >= 0, got {order}")
    vals = _values_array(values)
    if order > vals.size:
        return 0.0
    return float(_kernels.elem_sym_table(vals)[order])


def elementary_symmetric_table(values) -> np.ndarray:
    """All elementary symmetric functions of ``values``, orders 0..len."""
    return np.asarray(_kernels.elem_sym_table(_values_array(values)))


def reduced_symmetric(index: int, order: int, values) -> float:
    """Symmetric function of ``values`` with entry ``index`` removed.

    Satisfies e_j(all) = reduced(i, j) + values[i] * reduced(i, j - 1).
    """
    vals = _values_array(values)
    if not -vals.size <= index < vals.size:
        raise IndexError(f"principal index {index} out of range for {vals.size} values")
    if order < 0:
        raise InvalidOrderError(f"symmetric function order must be >= 0, got {order}")
    if order > vals.size - 1:
        return 0.0
    table = _kernels.elem_sym_table(vals)
    # removal recurrence: r^0 = 1, r^j = e_j - v * r^(j-1)
    value = vals[index]
    reduced = 1.0
    for j in range(1, order + 1):
        reduced = float(table[j]) - value * reduced
    return float(reduced)


@dataclasses.dataclass(frozen=True)
class NewtonTransform:
    """Diagonal of the k-th Newton transform in the principal frame."""

    order: int
    diagonal: np.ndarray

    @property
    def trace(self) -> float:
        return float(np.sum(self.diagonal))

    def matrix(self) -> np.ndarray:
        return np.diag(self.diagonal)


def newton_transform(order: int, values) -> NewtonTransform:
    """Newton transform of the principal-value multiset, order 0..len-1.

    Built by the diagonal recurrence p_k(i) = e_k - v_i * p_{k-1}(i); the
    order-0 transform is the identity.
    """
    vals = _values_array(values)
    if vals.size == 0:
        raise InvalidOrderError("need at least one principal value")
    if order < 0 or order > vals.size - 1:
        raise InvalidOrderError(
            f"transform order must lie in 0..{vals.size - 1}, got {order}"
        )
    table = _kernels.elem_sym_table(vals)
    diag = np.ones_like(vals)
    for j in range(1, order + 1):
        diag = float(table[j]) - vals * diag
    return NewtonTransform(order=order, diagonal=diag)


def symmetric_table(spectrum: CurvatureSpectrum) -> np.ndarray:
    """Per-sample elementary symmetric functions of the curvature spectrum.

    Returns shape (samples, n) with column j holding the order-j value; the
    order-0 column is identically 1.
    """
    count = spectrum.k_meridian.size
    out = np.empty((count, spectrum.n), dtype=float)
    for i in range(count):
        out[i] = _kernels.elem_sym_table(spectrum.principal_values(i))
    return out


def reduced_table(spectrum: CurvatureSpectrum, order: int) -> np.ndarray:
    """Per-sample Newton-transform diagonals of the curvature spectrum.

    Shape (samples, n - 1); row i is the diagonal at sample i.
    """
    count = spectrum.k_meridian.size
    out = np.empty((count, spectrum.n - 1), dtype=float)
    for i in range(count):
        out[i] = newton_transform(order, spectrum.principal_values(i)).diagonal
    return out


@dataclasses.dataclass(frozen=True)
class ClosedFormTable:
    """Closed-form symmetric-function table along a profile, with sign flags.

    ``printed`` holds the verbatim turning-angle closed forms, degree m in
    column m - 1.  Their reference spectrum takes the meridian curvature with
    the opposite sign to the measured one, so ``reference`` is the symmetric
    table of that sign-mixed spectrum and ``actual`` the table of the measured
    spectrum.  ``delta`` holds the constant flags with
    delta[m-1] * printed[:, m-1] == reference[:, m-1]; ``flag_deviation`` is
    the relative defect of that relation and ``consistent`` marks columns
    where the flag really is constant.  A non-constant ratio is reported, not
    silently rescaled.
    """

    n: int
    printed: np.ndarray
    reference: np.ndarray
    actual: np.ndarray
    delta: np.ndarray
    flag_deviation: np.ndarray
    consistent: np.ndarray


def _reference_values(eps: float, rate_i: float, x_i: float, n: int) -> np.ndarray:
    values = np.full(n - 1, -eps * x_i)
    values[0] = eps * rate_i
    return values


def closed_symmetric_functions(jet: ProfileJet, n: int) -> ClosedFormTable:
    """Evaluate the printed symmetric-function closed forms along a profile.

    Requires a unit-speed jet.  Degree-m closed form, with x = sin R / f:

        printed_m = eps * (C(n-2, m-1) R' x^(m-1) - C(n-2, m) x^m)
    """
    n = check_dimension(n)
    require_unit_speed(jet)
    eps = float(parity_sign(n))
    angle, rate, _ = turning_rates(jet)
    x = jet.phip / (jet.f * jet.speed)

    count = jet.f.size
    printed = np.empty((count, n - 1), dtype=float)
    for m in range(1, n):
        lead = _binomial(n - 2, m - 1) * rate * x ** (m - 1)
        tail = _binomial(n - 2, m) * x**m
        printed[:, m - 1] = eps * (lead - tail)

    reference = np.empty_like(printed)
    for i in range(count):
        table = _kernels.elem_sym_table(_reference_values(eps, rate[i], x[i], n))
        reference[i] = table[1:]

    actual = symmetric_table(shape_spectrum(jet, n))[:, 1:]

    delta = np.full(n - 1, np.nan)
    deviation = np.zeros(n - 1)
    consistent = np.zeros(n - 1, dtype=bool)
    for m in range(n - 1):
        ref = reference[:, m]
        mask = np.abs(ref) > _FLAG_FLOOR
        if not mask.any():
            continue
        first = int(np.flatnonzero(mask)[0])
        ratio = ref[first] / printed[first, m] if printed[first, m] != 0.0 else np.inf
        flag = 1.0 if ratio >= 0 else -1.0
        defect = np.abs(flag * printed[:, m] - ref)
        rel = float(defect.max() / np.abs(ref).max())
        delta[m] = flag
        deviation[m] = rel
        consistent[m] = rel < 1e-8
    return ClosedFormTable(
        n=n,
        printed=printed,
        reference=reference,
        actual=actual,
        delta=delta,
        flag_deviation=deviation,
        consistent=consistent,
    )


def symmetric_derivative(jet: ProfileJet, n: int, order: int) -> np.ndarray:
    """Radial derivative of the order-m symmetric curvature function.

    Chain rule over the two distinct principal values; regular everywhere a
    regular unit-speed jet is.  Orders outside 1..n-1 differentiate constants.
    """
    n = check_dimension(n)
    require_unit_speed(jet)
    if order < 0:
        raise InvalidOrderError(f"symmetric function order must be >= 0, got {order}")
    if order == 0 or order > n - 1:
        return np.zeros_like(jet.f)
    eps = float(parity_sign(n))
    spectrum = shape_spectrum(jet, n)
    km = spectrum.k_meridian
    kp = spectrum.k_parallel
    km_rate = eps * (jet.fppp * jet.phip - jet.fp * jet.phippp)
    kp_rate = -eps * (jet.phipp * jet.f - jet.phip * jet.fp) / jet.f**2

    # d e_m / dr = km' * e_{m-1}(without meridian) + (n-2) kp' * e_{m-1}(without one parallel)
    without_meridian = _binomial(n - 2, order - 1) * kp ** (order - 1)
    without_parallel = _binomial(n - 3, order - 1) * kp ** (order - 1)
    if order >= 2:
        without_parallel = without_parallel + km * _binomial(n - 3, order - 2) * kp ** (
            order - 2
        )
    return km_rate * without_meridian + (n - 2) * kp_rate * without_parallel


@dataclasses.dataclass(frozen=True)
class PenultimateGradient:
    """Radial rate of the degree-(n-2) symmetric curvature function.

    ``value`` is the derivative of the measured-spectrum function; ``printed``
    is the literal closed formula, which carries one extra parity sign:
    printed == parity_sign(n) * value wherever it is defined.
    """

    n: int
    value: np.ndarray
    printed: np.ndarray


def penultimate_gradient(jet: ProfileJet, n: int) -> PenultimateGradient:
    """Evaluate the closed gradient formula for the next-to-top function.

    The literal formula divides by sin R when n == 3, so that case raises
    :class:`SingularFormulaError` near sin R = 0 instead of returning junk.
    """
    n = check_dimension(n)
    require_unit_speed(jet)
    eps = float(parity_sign(n))
    _, rate, rate2 = turning_rates(jet)
    s = jet.phip / jet.speed
    c = jet.fp / jet.speed
    if n == 3 and np.any(np.abs(s) < 1e-12):
        raise SingularFormulaError(
            "power sin^(n-4) R is singular at sin R = 0 when n = 3"
        )
    f = jet.f
    core = (
        f**2 * rate2 * s
        + (n - 3) * f**2 * rate**2 * c
        - (n - 4) * f * rate * s * c
        - s**2 * c
    )
    printed = eps * (n - 2) * core * s ** (n - 4) / f ** (n - 1)
    value = symmetric_derivative(jet, n, n - 2)
    return PenultimateGradient(n=n, value=value, printed=printed)
