import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from rothyp.errors import (
    InvalidOrderError,
    SingularFormulaError,
    UnitSpeedError,
)
from rothyp.geometry_core import parity_sign, shape_spectrum
from rothyp.profiles import LineProfile, plane_profile
from rothyp.symfunc import (
    closed_symmetric_functions,
    elementary_symmetric,
    elementary_symmetric_table,
    newton_transform,
    penultimate_gradient,
    reduced_symmetric,
    reduced_table,
    symmetric_derivative,
    symmetric_table,
)

values_strategy = st.lists(
    st.floats(-3.0, 3.0, allow_nan=False, allow_infinity=False),
    min_size=1, max_size=12,
)


def test_known_symmetric_values():
    assert elementary_symmetric(2, (1.0, 2.0, 3.0)) == pytest.approx(11.0)
    assert elementary_symmetric(0, (5.0,)) == 1.0
    assert elementary_symmetric(4, (1.0, 2.0, 3.0)) == 0.0
    assert reduced_symmetric(0, 1, (1.0, 2.0, 3.0)) == pytest.approx(5.0)
    diag = newton_transform(1, (2.0, 3.0, 3.0)).diagonal
    assert np.allclose(diag, [6.0, 5.0, 5.0])


@settings(deadline=None, max_examples=200)
@given(values=values_strategy)
def test_elementary_symmetric_matches_enumeration(values):
    table = elementary_symmetric_table(values)
    for order in range(len(values) + 1):
        expected = helpers.sigma_enumerated(order, values)
        assert math.isclose(table[order], expected,
                            rel_tol=1e-11, abs_tol=1e-11)
        assert math.isclose(elementary_symmetric(order, values), expected,
                            rel_tol=1e-11, abs_tol=1e-11)


@settings(deadline=None, max_examples=200)
@given(values=values_strategy, data=st.data())
def test_reduced_symmetric_matches_enumeration(values, data):
    index = data.draw(st.integers(0, len(values) - 1))
    order = data.draw(st.integers(0, len(values) - 1))
    expected = helpers.reduced_enumerated(index, order, values)
    assert math.isclose(reduced_symmetric(index, order, values), expected,
                        rel_tol=1e-11, abs_tol=1e-11)


@settings(deadline=None, max_examples=200)
@given(values=values_strategy, data=st.data())
def test_removal_recurrence(values, data):
    index = data.draw(st.integers(0, len(values) - 1))
    order = data.draw(st.integers(1, len(values)))
    whole = elementary_symmetric(order, values)
    keep = reduced_symmetric(index, order, values) if order <= len(values) - 1 else 0.0
    drop = reduced_symmetric(index, order - 1, values)
    assert math.isclose(whole, keep + values[index] * drop,
                        rel_tol=1e-10, abs_tol=1e-10)


@settings(deadline=None, max_examples=200)
@given(values=values_strategy, data=st.data())
def test_newton_transform_diagonal_and_trace(values, data):
    order = data.draw(st.integers(0, len(values) - 1))
    transform = newton_transform(order, values)
    for i in range(len(values)):
        expected = helpers.reduced_enumerated(i, order, values)
        assert math.isclose(transform.diagonal[i], expected,
                            rel_tol=1e-10, abs_tol=1e-10)
    expected_trace = (len(values) - order) * elementary_symmetric(order, values)
    assert math.isclose(transform.trace, expected_trace,
                        rel_tol=1e-10, abs_tol=1e-10)
    assert np.allclose(np.diag(transform.matrix()), transform.diagonal)


def test_order_validation():
    with pytest.raises(InvalidOrderError):
        elementary_symmetric(-1, (1.0, 2.0))
    with pytest.raises(InvalidOrderError):
        newton_transform(3, (1.0, 2.0, 3.0))
    with pytest.raises(InvalidOrderError):
        newton_transform(-1, (1.0,))
    with pytest.raises(IndexError):
        reduced_symmetric(5, 1, (1.0, 2.0))
    assert reduced_symmetric(0, 2, (1.0, 2.0)) == 0.0


def test_spectrum_tables(rng):
    profile = helpers.random_unit_speed_profile(rng)
    jet = profile.jet(profile.grid(6))
    for n in (3, 5, 6):
        spectrum = shape_spectrum(jet, n)
        table = symmetric_table(spectrum)
        assert table.shape == (6, n)
        assert np.allclose(table[:, 0], 1.0)
        reduced = reduced_table(spectrum, min(1, n - 2))
        assert reduced.shape == (6, n - 1)
        for i in (0, 3):
            vals = spectrum.principal_values(i)
            for order in range(n):
                assert table[i, order] == pytest.approx(
                    helpers.sigma_enumerated(order, vals),
                    rel=1e-11, abs=1e-11)


def test_closed_forms_match_reference_enumeration(rng):
    profile = helpers.random_unit_speed_profile(rng)
    jet = profile.jet(profile.grid(10))
    for n in range(3, 9):
        eps = parity_sign(n)
        table = closed_symmetric_functions(jet, n)
        assert table.printed.shape == (10, n - 1)
        # reference column m-1 is the symmetric function of the multiset
        # {eps*R', -eps*x (n-2 times)}; check it against enumeration
        from rothyp.profiles import turning_rates

        _, rate, _ = turning_rates(jet)
        x = jet.phip / (jet.f * jet.speed)
        for i in (0, 4, 9):
            multiset = [eps * rate[i]] + [-eps * x[i]] * (n - 2)
            for m in range(1, n):
                assert table.reference[i, m - 1] == pytest.approx(
                    helpers.sigma_enumerated(m, multiset),
                    rel=1e-11, abs=1e-11)
        # actual column against the measured spectrum
        spectrum = shape_spectrum(jet, n)
        for i in (0, 9):
            vals = spectrum.principal_values(i)
            for m in range(1, n):
                assert table.actual[i, m - 1] == pytest.approx(
                    helpers.sigma_enumerated(m, vals), rel=1e-11, abs=1e-11)


def test_closed_form_flags_are_constant(rng):
    profile = helpers.random_unit_speed_profile(rng)
    jet = profile.jet(profile.grid(24))
    for n in range(3, 9):
        eps = parity_sign(n)
        table = closed_symmetric_functions(jet, n)
        assert table.consistent.all()
        for m in range(1, n):
            expected_flag = float((-eps) ** (m + 1))
            assert table.delta[m - 1] == expected_flag
            assert table.flag_deviation[m - 1] < 1e-8


def test_closed_forms_require_unit_speed():
    profile = LineProfile(1.0, 0.0, 2.0, 0.0, (0.0, 1.0))
    jet = profile.jet(profile.grid(3))
    with pytest.raises(UnitSpeedError):
        closed_symmetric_functions(jet, 4)


def test_symmetric_derivative_against_finite_differences(rng):
    profile = helpers.random_unit_speed_profile(rng)
    points = profile.grid(5)
    for n in (3, 4, 6):
        jet = profile.jet(points)
        for order in range(1, n):
            rates = symmetric_derivative(jet, n, order)

            def sigma_at(r, order=order, n=n):
                j = profile.jet(np.array([r]), check_domain=False)
                return float(symmetric_table(shape_spectrum(j, n))[0, order])

            for i, r in enumerate(points):
                fd = helpers.richardson_difference(sigma_at, float(r), 1e-4)
                assert rates[i] == pytest.approx(fd, rel=5e-6, abs=5e-7), (
                    n, order)


def test_symmetric_derivative_edge_orders(rng):
    profile = helpers.random_unit_speed_profile(rng)
    jet = profile.jet(profile.grid(3))
    assert np.all(symmetric_derivative(jet, 5, 0) == 0.0)
    assert np.all(symmetric_derivative(jet, 5, 5) == 0.0)
    with pytest.raises(InvalidOrderError):
        symmetric_derivative(jet, 5, -1)


def test_penultimate_gradient_sign_identity(rng):
    profile = helpers.random_unit_speed_profile(rng)
    jet = profile.jet(profile.grid(8))
    for n in (4, 5, 6, 7):
        eps = parity_sign(n)
        grad = penultimate_gradient(jet, n)
        assert np.allclose(grad.printed, eps * grad.value,
                           rtol=1e-9, atol=1e-12)


def test_penultimate_gradient_matches_finite_differences(rng):
    profile = helpers.random_unit_speed_profile(rng)
    points = profile.grid(4)
    for n in (4, 5, 6):
        jet = profile.jet(points)
        grad = penultimate_gradient(jet, n)

        def sigma_at(r, n=n):
            j = profile.jet(np.array([r]), check_domain=False)
            return float(symmetric_table(shape_spectrum(j, n))[0, n - 2])

        for i, r in enumerate(points):
            fd = helpers.richardson_difference(sigma_at, float(r), 1e-4)
            assert grad.value[i] == pytest.approx(fd, rel=1e-6, abs=1e-8)


def test_penultimate_gradient_singular_when_sine_vanishes():
    flat = plane_profile(0.5)
    jet = flat.jet(flat.grid(3))
    with pytest.raises(SingularFormulaError):
        penultimate_gradient(jet, 3)
    # for n >= 4 the power of sin R is nonnegative and the value is defined
    grad = penultimate_gradient(jet, 4)
    assert np.allclose(grad.printed, 0.0)
