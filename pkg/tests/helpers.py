"""Shared oracles and samplers for the test suite.

The symmetric-function oracles enumerate subsets directly, so they are slow
but independent of the package's recurrence-based implementations.
"""

import itertools
import math
import os

import numpy as np

from rothyp.profiles import TurningAngleProfile

SEED = int(os.environ.get("ROTHYP_SEED", "0"))


def make_rng(salt: int = 0) -> np.random.Generator:
    return np.random.default_rng(SEED * 1_000_003 + salt)


def random_chart(rng: np.random.Generator, n: int) -> np.ndarray:
    """Chart angles away from the poles: first in (-pi, pi), rest interior."""
    angles = rng.uniform(-1.25, 1.25, n - 2)
    angles[0] = rng.uniform(-math.pi, math.pi)
    return angles


def random_unit_speed_profile(
    rng: np.random.Generator,
    domain: tuple[float, float] = (0.0, 1.0),
    slope_scale: float = 0.35,
) -> TurningAngleProfile:
    """Random tangent-angle profile whose radius stays safely positive."""
    poly = [float(rng.uniform(-0.6, 0.6)),
            float(rng.uniform(-slope_scale, slope_scale)),
            float(rng.uniform(-slope_scale, slope_scale))]
    fourier = [(float(rng.uniform(-0.1, 0.1)), float(rng.uniform(-0.1, 0.1)),
                float(rng.uniform(0.5, 2.0)))]
    mid = 0.5 * (domain[0] + domain[1])
    return TurningAngleProfile(
        poly,
        fourier,
        f_ref=float(rng.uniform(0.9, 1.7)),
        phi_ref=float(rng.uniform(-0.5, 0.5)),
        r_ref=mid,
        domain=domain,
    )


def sigma_enumerated(order: int, values) -> float:
    """Elementary symmetric function by explicit subset enumeration."""
    values = list(values)
    if order == 0:
        return 1.0
    if order < 0 or order > len(values):
        return 0.0
    return float(sum(math.prod(c)
                     for c in itertools.combinations(values, order)))


def reduced_enumerated(index: int, order: int, values) -> float:
    """Elementary symmetric function of the values with one entry removed."""
    values = list(values)
    rest = values[:index] + values[index + 1:]
    return sigma_enumerated(order, rest)


def central_difference(fn, x: float, h: float) -> float:
    return (fn(x + h) - fn(x - h)) / (2.0 * h)


def richardson_difference(fn, x: float, h: float = 1e-5) -> float:
    coarse = central_difference(fn, x, h)
    fine = central_difference(fn, x, h / 2.0)
    return (4.0 * fine - coarse) / 3.0
