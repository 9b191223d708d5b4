"""Integer-audit tests: every value is recomputed through sympy."""

from __future__ import annotations

import json
import pathlib

import numpy as np
import pytest
import sympy as sp

from rothyp import (
    InvalidDimensionError,
    SEED_POLYNOMIALS,
    SingularFormulaError,
    audit_table,
    base_polynomials,
    composite_polynomials,
    obstruction_sum,
    obstruction_terms,
    radial_polynomial_coefficients,
    slope_ratio,
    slope_ratio_coefficients,
)

DATA = pathlib.Path(__file__).parent / "data"

_N = sp.Symbol("n")

# The same coefficient data, but assembled symbolically so the product and
# power arithmetic runs through sympy instead of plain ints.
_SYM = {
    "septic": (2 * _N**7 - 44 * _N**6 + 325 * _N**5 - 807 * _N**4
               - 796 * _N**3 + 6906 * _N**2 - 10227 * _N + 4545),
    "octic": (10 * _N**8 - 273 * _N**7 + 3089 * _N**6 - 18843 * _N**5
              + 67223 * _N**4 - 140907 * _N**3 + 162003 * _N**2
              - 81929 * _N + 5851),
    "nonic": (3 * _N**9 - 104 * _N**8 + 1549 * _N**7 - 13028 * _N**6
              + 68261 * _N**5 - 230910 * _N**4 + 502291 * _N**3
              - 670392 * _N**2 + 486104 * _N - 137246),
    "quartic": _N**4 - 24 * _N**3 + 194 * _N**2 - 624 * _N + 709,
    "quintic": (3 * _N**5 - 56 * _N**4 + 398 * _N**3 - 1380 * _N**2
                + 2367 * _N - 1604),
    "negated_quartic": -(2 * _N**4 - 29 * _N**3 + 129 * _N**2
                         - 219 * _N + 105),
}
_SYM["factored_septic"] = (-3 * (_N - 7) * (_N - 3) * (_N - 1)
                           * _SYM["quartic"])


def _sym_at(name: str, n: int) -> int:
    value = _SYM[name].subs(_N, sp.Integer(n))
    return int(value)


def _oracle_row(n: int) -> dict:
    """Recompute one audit row end to end in sympy integers."""
    m = sp.Integer(n)
    septic = _SYM["septic"].subs(_N, m)
    octic = _SYM["octic"].subs(_N, m)
    nonic = _SYM["nonic"].subs(_N, m)
    factored = _SYM["factored_septic"].subs(_N, m)
    quintic = _SYM["quintic"].subs(_N, m)
    negq = _SYM["negated_quartic"].subs(_N, m)
    quartic = _SYM["quartic"].subs(_N, m)
    shift = (m + 1) ** 2
    combo1 = septic * (-negq) + octic * shift
    combo2 = septic * quintic + nonic * shift
    combo3 = septic * quartic + factored * shift
    pair_a = combo1 * quintic + combo2 * negq
    pair_b = combo1 * quartic + combo3 * negq
    weight = (m - 2) ** 15
    terms = (
        weight * shift * pair_b**3,
        -weight * negq * pair_a * pair_b**2,
        -weight * quintic * pair_a**2 * pair_b,
        weight * quartic * pair_a**3,
    )
    return {
        "seeds": (int(septic), int(octic), int(nonic), int(factored)),
        "composites": (int(quintic), int(negq), int(quartic),
                       int(combo1), int(combo2), int(combo3)),
        "terms": tuple(int(t) for t in terms),
        "total": int(sum(terms)),
    }


def test_seed_polynomials_match_sympy():
    for name, fn in SEED_POLYNOMIALS.items():
        for n in range(-10, 21):
            assert fn(n) == _sym_at(name, n), (name, n)


def test_factored_septic_equals_its_expansion():
    expanded = sp.Poly(sp.expand(_SYM["factored_septic"]), _N)
    assert expanded.degree() == 7
    coeffs = [int(c) for c in expanded.all_coeffs()]
    fn = SEED_POLYNOMIALS["factored_septic"]
    for n in range(-10, 21):
        horner = 0
        for c in coeffs:
            horner = horner * n + c
        assert fn(n) == horner


def test_factored_septic_zeros():
    fn = SEED_POLYNOMIALS["factored_septic"]
    assert fn(1) == 0
    assert fn(3) == 0
    assert fn(7) == 0
    for n in range(-10, 21):
        if n not in (1, 3, 7):
            assert fn(n) != 0


def test_known_seed_values():
    seeds = base_polynomials(3)
    assert seeds.septic == 432
    assert seeds.octic == 256
    assert seeds.nonic == 64
    assert seeds.factored_septic == 0
    assert SEED_POLYNOMIALS["quartic"](7) == 16


def test_rows_match_sympy_oracle():
    for n in range(3, 13):
        row = obstruction_sum(n)
        oracle = _oracle_row(n)
        seeds = row.seeds
        assert (seeds.septic, seeds.octic, seeds.nonic,
                seeds.factored_septic) == oracle["seeds"]
        comp = row.composites
        assert (comp.quintic, comp.negated_quartic, comp.quartic,
                comp.combo1, comp.combo2, comp.combo3) == oracle["composites"]
        assert row.terms == oracle["terms"]
        assert row.total == oracle["total"]
        assert row.nonvanishing is (oracle["total"] != 0)


def test_terms_are_exact_ints():
    for n in (3, 7, 12):
        for term in obstruction_terms(n):
            assert type(term) is int


def test_vanishing_seed_is_flagged():
    for n in range(3, 13):
        row = obstruction_sum(n)
        if n in (3, 7):
            assert "factored septic seed vanishes" in row.notes
        else:
            assert row.notes == ()
        # The elimination survives every audited dimension.
        assert row.nonvanishing
        assert row.total != 0


def test_table_is_rerun_stable():
    first = audit_table(range(3, 13))
    second = audit_table(range(3, 13))
    assert first == second


def test_dimension_validation():
    with pytest.raises(InvalidDimensionError):
        base_polynomials(2)
    with pytest.raises(InvalidDimensionError):
        composite_polynomials(1)
    with pytest.raises(InvalidDimensionError):
        obstruction_sum(0)


def _row_payload(row) -> dict:
    return {
        "n": row.n,
        "seeds": {
            "septic": row.seeds.septic,
            "octic": row.seeds.octic,
            "nonic": row.seeds.nonic,
            "factored_septic": row.seeds.factored_septic,
        },
        "composites": {
            "quintic": row.composites.quintic,
            "negated_quartic": row.composites.negated_quartic,
            "quartic": row.composites.quartic,
            "combo1": row.composites.combo1,
            "combo2": row.composites.combo2,
            "combo3": row.composites.combo3,
        },
        "terms": list(row.terms),
        "total": row.total,
        "nonvanishing": row.nonvanishing,
        "notes": list(row.notes),
    }


def test_golden_table():
    # Frozen snapshot for n = 3..12; JSON ints are exact, so this pins
    # every digit of every intermediate.
    with open(DATA / "obstruction_table.json", encoding="utf-8") as fh:
        expected = json.load(fh)
    rows = [_row_payload(row) for row in audit_table(range(3, 13))]
    assert rows == expected


def test_slope_coefficients_vanish_with_cosine():
    for n in (3, 5, 8):
        parts = slope_ratio_coefficients(n, np.pi / 2, 1.3, -0.4)
        for part in parts:
            assert abs(float(part)) < 1e-12


def test_slope_low_numerator_dies_at_seven():
    rng = np.random.default_rng(11)
    for _ in range(25):
        angle = rng.uniform(0.1, 1.4)
        lam = rng.uniform(-2, 2)
        phi = rng.uniform(-2, 2)
        _, low_num, _, _ = slope_ratio_coefficients(7, angle, lam, phi)
        assert low_num == 0.0


def test_slope_ratio_matches_coefficients():
    n, angle, lam, phi = 5, 0.9, 0.7, -0.3
    hn, ln, hd, ld = slope_ratio_coefficients(n, angle, lam, phi)
    f = np.array([0.5, 1.0, 1.7])
    expected = (hn * f ** (n - 1) + ln) / (hd * f**n + ld * f)
    got = slope_ratio(n, angle, lam, phi, f)
    assert np.allclose(got, expected, rtol=1e-14)


def test_slope_ratio_singular_denominator():
    # cos(angle) = 0 kills the whole denominator.
    with pytest.raises(SingularFormulaError):
        slope_ratio(4, np.pi / 2, 1.0, 1.0, 1.0)


def test_radial_degrees():
    for n in (3, 4, 9):
        coeffs = radial_polynomial_coefficients(n, 0.8, 0.5, 0.2)
        assert coeffs.degrees == (3 * (n - 1), 2 * (n - 1), n - 1, 0)


def test_radial_collapse_without_axis_data():
    # lam = phi_axis = 0 wipes out every coefficient except the constant one.
    for n in (4, 5, 6):
        coeffs = radial_polynomial_coefficients(n, 0.7, 0.0, 0.0)
        assert float(coeffs.coeff3) == 0.0
        assert float(coeffs.coeff2) == 0.0
        assert float(coeffs.coeff1) == 0.0
        assert float(coeffs.coeff0) != 0.0


def test_radial_constant_term_grouped_form():
    # coeff0 factors as (n-2) s^(n-3) (ld^2 s^2 + (n-3) ln ld s + ln^2).
    rng = np.random.default_rng(23)
    for n in (3, 4, 6, 9):
        for _ in range(10):
            angle = rng.uniform(0.15, 1.35)
            lam = rng.uniform(-1.5, 1.5)
            phi = rng.uniform(-1.5, 1.5)
            _, ln, _, ld = slope_ratio_coefficients(n, angle, lam, phi)
            s = np.sin(angle)
            grouped = (n - 2) * s ** (n - 3) * (
                ld * ld * s * s + (n - 3) * ln * ld * s + ln * ln
            )
            coeff0 = float(radial_polynomial_coefficients(
                n, angle, lam, phi).coeff0)
            assert coeff0 == pytest.approx(float(grouped), rel=1e-12)


def test_radial_relation_grouped_form():
    # All four coefficients together collapse into products of the slope
    # numerator and the cleared denominator D = hd p + ld:
    #   relation(p) = (n-2) s^(n-3) (s^2 D^2 + (n-3) s N D + N^2) - mix p D^2
    # with N = hn p + ln.  Check the distributed and grouped forms agree.
    rng = np.random.default_rng(31)
    for n in (3, 4, 5, 7):
        for _ in range(8):
            angle = rng.uniform(0.2, 1.3)
            lam = rng.uniform(-1.0, 1.0)
            phi = rng.uniform(-1.0, 1.0)
            hn, ln, hd, ld = slope_ratio_coefficients(n, angle, lam, phi)
            coeffs = radial_polynomial_coefficients(n, angle, lam, phi)
            s = np.sin(angle)
            mix = phi + lam * s * s
            p = rng.uniform(0.4, 2.5)
            big_n = hn * p + ln
            big_d = hd * p + ld
            relation = (coeffs.coeff3 * p**3 + coeffs.coeff2 * p**2
                        + coeffs.coeff1 * p + coeffs.coeff0)
            grouped = (n - 2) * s ** (n - 3) * (
                s * s * big_d * big_d
                + (n - 3) * s * big_n * big_d
                + big_n * big_n
            ) - mix * p * big_d * big_d
            assert float(relation) == pytest.approx(
                float(grouped), rel=1e-11, abs=1e-11)
