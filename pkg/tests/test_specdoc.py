"""Wire-format tests: strict parsing, exact round trips, honest rejections."""

from __future__ import annotations

import json
import math

import numpy as np
import pytest

from rothyp import (
    CatenaryProfile,
    CircleProfile,
    LineProfile,
    ProfileSpecDocument,
    SpecDocumentError,
    TurningAngleProfile,
    cone_profile,
    cylinder_profile,
    document_to_profile,
    emit_document,
    load_profile,
    parse_document,
    plane_profile,
    profile_to_document,
    solve_minimal_profile,
    sphere_profile,
)

import helpers


def _base(family="cylinder", params=None, domain=(0.3, 2.3), n=4,
          unit_speed=True):
    return {
        "family": family,
        "params": {"radius": 0.8} if params is None else params,
        "domain": list(domain),
        "n": n,
        "unit_speed": unit_speed,
    }


# ---------------------------------------------------------------- parsing

def test_parse_accepts_text_bytes_and_mapping():
    raw = _base()
    from_map = parse_document(raw)
    from_text = parse_document(json.dumps(raw))
    from_bytes = parse_document(json.dumps(raw).encode())
    assert from_map == from_text == from_bytes
    assert from_map.family == "cylinder"
    assert from_map.domain == (0.3, 2.3)
    assert from_map.params == {"radius": 0.8}


def test_parse_rejects_invalid_json():
    with pytest.raises(SpecDocumentError, match="invalid JSON"):
        parse_document("{not json")


def test_parse_rejects_non_object():
    with pytest.raises(SpecDocumentError, match="JSON object"):
        parse_document("[1, 2]")


def test_parse_names_unknown_top_field():
    raw = _base()
    raw["surprise"] = 1
    with pytest.raises(SpecDocumentError, match="'surprise'"):
        parse_document(raw)


def test_parse_names_missing_top_field():
    raw = _base()
    del raw["domain"]
    with pytest.raises(SpecDocumentError, match="'domain'"):
        parse_document(raw)


def test_parse_rejects_unknown_family():
    with pytest.raises(SpecDocumentError, match="'helix'"):
        parse_document(_base(family="helix"))


def test_parse_rejects_bad_params_container():
    raw = _base()
    raw["params"] = [0.8]
    with pytest.raises(SpecDocumentError, match="'params'"):
        parse_document(raw)


@pytest.mark.parametrize("bad", ["0.8", True, None, float("nan"), float("inf")])
def test_parse_rejects_non_numeric_param(bad):
    raw = _base(params={"radius": bad})
    with pytest.raises(SpecDocumentError, match="params.radius"):
        parse_document(raw)


def test_parse_names_unknown_family_param():
    raw = _base(params={"radius": 0.8, "slope": 1.0})
    with pytest.raises(SpecDocumentError, match="'slope'.*'cylinder'"):
        parse_document(raw)


def test_parse_names_missing_required_param():
    raw = _base(family="minimal", params={"c1": 1.0, "f_min": 1.1}, n=5)
    with pytest.raises(SpecDocumentError, match="'f_max'"):
        parse_document(raw)


def test_parse_optional_params_are_optional():
    doc = parse_document(_base(family="circle", params={"radius": 0.7}))
    assert doc.params == {"radius": 0.7}
    doc = parse_document(_base(family="plane", params={}))
    assert doc.params == {}


@pytest.mark.parametrize("domain, message", [
    ([1.0], r"\[min, max\]"),
    ([1.0, 2.0, 3.0], r"\[min, max\]"),
    ([2.0, 1.0], "increase"),
    ([1.0, 1.0], "increase"),
    (["a", 2.0], "domain"),
])
def test_parse_rejects_bad_domain(domain, message):
    raw = _base()
    raw["domain"] = domain
    with pytest.raises(SpecDocumentError, match=message):
        parse_document(raw)


@pytest.mark.parametrize("n", [2, 0, -3, 3.0, "4", True])
def test_parse_rejects_bad_dimension(n):
    raw = _base()
    raw["n"] = n
    with pytest.raises(SpecDocumentError, match="'n'"):
        parse_document(raw)


@pytest.mark.parametrize("flag", [1, 0, "true", None])
def test_parse_rejects_non_boolean_unit_speed(flag):
    raw = _base()
    raw["unit_speed"] = flag
    with pytest.raises(SpecDocumentError, match="unit_speed"):
        parse_document(raw)


# ------------------------------------------------- turning-angle parameters

def _turning_params():
    return {
        "poly0": 0.2, "poly1": 0.4,
        "fourier0_sin": 0.1, "fourier0_cos": 0.05, "fourier0_freq": 2.0,
        "f_ref": 1.1, "phi_ref": 0.0, "r_ref": 0.5,
    }


def test_turning_params_parse():
    raw = _base(family="turning_angle", params=_turning_params(),
                domain=(0.0, 1.0))
    doc = parse_document(raw)
    assert doc.params["poly1"] == 0.4


def test_turning_rejects_gap_in_poly():
    params = _turning_params()
    params["poly3"] = 0.1
    raw = _base(family="turning_angle", params=params, domain=(0.0, 1.0))
    with pytest.raises(SpecDocumentError, match="contiguous poly"):
        parse_document(raw)


def test_turning_rejects_empty_poly():
    raw = _base(family="turning_angle",
                params={"f_ref": 1.0}, domain=(0.0, 1.0))
    with pytest.raises(SpecDocumentError, match="poly0"):
        parse_document(raw)


def test_turning_rejects_incomplete_fourier_term():
    params = _turning_params()
    del params["fourier0_cos"]
    raw = _base(family="turning_angle", params=params, domain=(0.0, 1.0))
    with pytest.raises(SpecDocumentError, match="fourier term 0"):
        parse_document(raw)


def test_turning_rejects_fourier_gap():
    params = _turning_params()
    params.update({"fourier2_sin": 0.1, "fourier2_cos": 0.1,
                   "fourier2_freq": 1.0})
    raw = _base(family="turning_angle", params=params, domain=(0.0, 1.0))
    with pytest.raises(SpecDocumentError, match="contiguous fourier"):
        parse_document(raw)


def test_turning_rejects_unknown_name():
    params = _turning_params()
    params["poly_extra"] = 1.0
    raw = _base(family="turning_angle", params=params, domain=(0.0, 1.0))
    with pytest.raises(SpecDocumentError, match="'poly_extra'"):
        parse_document(raw)


# ------------------------------------------------------------ round trips

def _document_profiles():
    rng = helpers.make_rng(77)
    yield profile_to_document(plane_profile(0.6, (0.35, 2.35)), 4)
    yield profile_to_document(cylinder_profile(0.8), 3)
    yield profile_to_document(cone_profile(0.6, (0.45, 2.45)), 5)
    yield profile_to_document(sphere_profile(0.8, (0.08, 2.3)), 4)
    yield profile_to_document(CatenaryProfile(0.9, (-1.1, 1.1)), 3)
    yield profile_to_document(
        helpers.random_unit_speed_profile(rng, domain=(0.0, 1.0)), 4)
    yield profile_to_document(
        TurningAngleProfile([0.3], [], f_ref=1.2, domain=(0.0, 0.8)), 6)
    sol = solve_minimal_profile(5, (1.1, 2.0))
    yield profile_to_document(sol.profile(), 5)


def test_emit_parse_round_trip_is_exact():
    for doc in _document_profiles():
        again = parse_document(emit_document(doc))
        assert again == doc


def test_emit_is_canonical_json():
    doc = parse_document(_base())
    text = emit_document(doc)
    assert text == json.dumps(json.loads(text), sort_keys=True)


def test_document_rebuilds_equivalent_profile():
    # Parse/emit then rebuild; jets must agree pointwise with the original.
    rng = helpers.make_rng(78)
    originals = [
        cylinder_profile(0.8),
        cone_profile(0.6, (0.45, 2.45)),
        sphere_profile(0.8, (0.08, 2.3)),
        CatenaryProfile(0.9, (-1.1, 1.1)),
        helpers.random_unit_speed_profile(rng, domain=(0.0, 1.0)),
    ]
    for original in originals:
        doc = parse_document(emit_document(profile_to_document(original, 4)))
        rebuilt = document_to_profile(doc)
        lo, hi = original.domain
        rs = np.linspace(lo + 1e-9, hi - 1e-9, 7)
        a, b = original.jet(rs), rebuilt.jet(rs)
        for field in ("f", "fp", "fpp", "phi", "phip", "phipp"):
            assert np.allclose(getattr(a, field), getattr(b, field),
                               rtol=1e-12, atol=1e-12), field


def test_minimal_document_round_trip():
    sol = solve_minimal_profile(5, (1.1, 2.0), c1=0.9)
    profile = sol.profile()
    doc = profile_to_document(profile, 5)
    assert doc.family == "minimal"
    rebuilt = document_to_profile(doc)
    rs = np.linspace(profile.domain[0] + 1e-9, profile.domain[1] - 1e-9, 5)
    assert np.allclose(profile.jet(rs).f, rebuilt.jet(rs).f, rtol=1e-9)
    assert np.allclose(profile.jet(rs).phi, rebuilt.jet(rs).phi, rtol=1e-9)


def test_minimal_document_checks_dimension():
    profile = solve_minimal_profile(5, (1.1, 2.0)).profile()
    with pytest.raises(SpecDocumentError, match="'n'"):
        profile_to_document(profile, 4)


def test_minimal_document_domain_must_match_solver():
    profile = solve_minimal_profile(4, (1.1, 2.0)).profile()
    doc = profile_to_document(profile, 4)
    tampered = ProfileSpecDocument(
        family=doc.family,
        params=doc.params,
        domain=(doc.domain[0], doc.domain[1] + 0.25),
        n=doc.n,
        unit_speed=doc.unit_speed,
    )
    with pytest.raises(SpecDocumentError, match="domain"):
        document_to_profile(tampered)


def test_descending_catenary_has_no_document_form():
    profile = solve_minimal_profile(3, (1.05, 2.1), sign=-1).profile()
    with pytest.raises(SpecDocumentError, match="descending"):
        profile_to_document(profile, 3)


def test_unit_speed_flag_must_match_profile():
    raw = _base()
    raw["unit_speed"] = False
    with pytest.raises(SpecDocumentError, match="unit_speed"):
        document_to_profile(parse_document(raw))
    skewed = _base(family="line",
                   params={"f0": 1.0, "phi0": 0.0, "df": 1.0, "dphi": 1.0})
    with pytest.raises(SpecDocumentError, match="unit_speed"):
        document_to_profile(parse_document(skewed))


def test_flat_convenience_families_build():
    plane_doc = parse_document(_base(family="plane", params={"height": 0.6}))
    plane = document_to_profile(plane_doc)
    assert isinstance(plane, LineProfile)
    assert plane.jet(1.0).phi.item() == pytest.approx(0.6)

    cone_doc = parse_document(
        _base(family="cone", params={"aperture": 0.6}, domain=(0.45, 2.45)))
    cone = document_to_profile(cone_doc)
    j = cone.jet(1.0)
    assert j.f.item() == pytest.approx(math.sin(0.6))
    assert j.phi.item() == pytest.approx(math.cos(0.6))


def test_circle_document_builds_circle():
    doc = parse_document(_base(
        family="circle",
        params={"radius": 0.8, "center_f": 0.1, "center_phi": -0.2,
                "phase": 0.3},
        domain=(0.1, 1.9),
    ))
    profile = document_to_profile(doc)
    assert isinstance(profile, CircleProfile)
    assert profile.radius == 0.8
    assert profile.center_phi == -0.2


def test_turning_document_builds_profile():
    raw = _base(family="turning_angle", params=_turning_params(),
                domain=(0.0, 1.0))
    profile = document_to_profile(parse_document(raw))
    assert isinstance(profile, TurningAngleProfile)
    doc2 = profile_to_document(profile, 4)
    assert parse_document(emit_document(doc2)).params == doc2.params


def test_profile_without_document_form_is_rejected():
    class Oddball(CircleProfile):
        family = "spiral"

    with pytest.raises(SpecDocumentError, match="'spiral'"):
        profile_to_document(Oddball(0.5), 3)


# ------------------------------------------------------------------ files

def test_load_profile_round_trip(tmp_path):
    doc = profile_to_document(cylinder_profile(0.8), 4)
    path = tmp_path / "cyl.json"
    path.write_text(emit_document(doc), encoding="utf-8")
    profile, loaded = load_profile(str(path))
    assert loaded == doc
    assert isinstance(profile, LineProfile)


def test_load_profile_missing_file():
    with pytest.raises(SpecDocumentError, match="cannot read"):
        load_profile("/nonexistent/profile.json")
