"""Profile description documents: a small JSON wire format.

A document names a profile family, its numeric parameters, the parameter
window, the ambient dimension and whether the parametrization is unit speed.
Parsing is strict: unknown fields and malformed values are rejected with the
offending field named, and parse/emit round-trips are exact.
"""

from __future__ import annotations

import dataclasses
import json
import math
import re
from typing import Mapping

from .errors import SpecDocumentError
from .profiles import (
    CatenaryProfile,
    CircleProfile,
    LineProfile,
    ProfileCurve,
    TurningAngleProfile,
    cone_profile,
    cylinder_profile,
    plane_profile,
)
from . import profile_solvers

__all__ = [
    "ProfileSpecDocument",
    "document_to_profile",
    "emit_document",
    "load_profile",
    "parse_document",
    "profile_to_document",
]

_TOP_FIELDS = ("family", "params", "domain", "n", "unit_speed")

# family -> (required params, optional params); turning_angle is validated
# separately because its parameter names are indexed.
_FIXED_FAMILIES: dict[str, tuple[frozenset[str], frozenset[str]]] = {
    "line": (frozenset({"f0", "phi0", "df", "dphi"}), frozenset()),
    "circle": (frozenset({"radius"}),
               frozenset({"center_f", "center_phi", "phase"})),
    "plane": (frozenset(), frozenset({"height"})),
    "cylinder": (frozenset({"radius"}), frozenset()),
    "cone": (frozenset({"aperture"}), frozenset()),
    "catenary": (frozenset({"waist"}), frozenset()),
    "minimal": (frozenset({"c1", "f_min", "f_max"}), frozenset({"sign"})),
}

_POLY_KEY = re.compile(r"^poly(\d+)$")
_FOURIER_KEY = re.compile(r"^fourier(\d+)_(sin|cos|freq)$")
_TURNING_FIXED = frozenset({"f_ref", "phi_ref", "r_ref"})


@dataclasses.dataclass(frozen=True)
class ProfileSpecDocument:
    """Parsed profile description."""

    family: str
    params: dict[str, float]
    domain: tuple[float, float]
    n: int
    unit_speed: bool


def _require_number(field: str, value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SpecDocumentError(f"field {field!r} must be a number, got {value!r}")
    out = float(value)
    if not math.isfinite(out):
        raise SpecDocumentError(f"field {field!r} must be finite, got {value!r}")
    return out


def _validate_turning_params(params: dict[str, float]) -> None:
    poly_indices = set()
    fourier_parts: dict[int, set[str]] = {}
    for key in params:
        if key in _TURNING_FIXED:
            continue
        poly_match = _POLY_KEY.match(key)
        if poly_match:
            poly_indices.add(int(poly_match.group(1)))
            continue
        fourier_match = _FOURIER_KEY.match(key)
        if fourier_match:
            idx = int(fourier_match.group(1))
            fourier_parts.setdefault(idx, set()).add(fourier_match.group(2))
            continue
        raise SpecDocumentError(f"unknown parameter {key!r} for family 'turning_angle'")
    if poly_indices != set(range(len(poly_indices))) or not poly_indices:
        raise SpecDocumentError(
            "field 'params' needs contiguous poly0..polyK coefficients"
        )
    if set(fourier_parts) != set(range(len(fourier_parts))):
        raise SpecDocumentError(
            "field 'params' needs contiguous fourier0.. term indices"
        )
    for idx, parts in fourier_parts.items():
        if parts != {"sin", "cos", "freq"}:
            raise SpecDocumentError(
                f"fourier term {idx} needs _sin, _cos and _freq parts"
            )


def parse_document(source: str | bytes | Mapping) -> ProfileSpecDocument:
    """Parse and validate a profile description.

    Accepts JSON text or an already-decoded mapping.  Any unknown field at
    either level is an error naming the field.
    """
    if isinstance(source, (str, bytes)):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise SpecDocumentError(f"invalid JSON: {exc}") from exc
    else:
        data = dict(source)
    if not isinstance(data, dict):
        raise SpecDocumentError("document must be a JSON object")
    for key in data:
        if key not in _TOP_FIELDS:
            raise SpecDocumentError(f"unknown field {key!r}")
    for key in _TOP_FIELDS:
        if key not in data:
            raise SpecDocumentError(f"missing field {key!r}")

    family = data["family"]
    if family not in _FIXED_FAMILIES and family != "turning_angle":
        raise SpecDocumentError(f"field 'family' has unknown value {family!r}")

    raw_params = data["params"]
    if not isinstance(raw_params, dict):
        raise SpecDocumentError("field 'params' must be an object")
    params = {
        str(key): _require_number(f"params.{key}", value)
        for key, value in raw_params.items()
    }
    if family == "turning_angle":
        _validate_turning_params(params)
    else:
        required, optional = _FIXED_FAMILIES[family]
        for key in params:
            if key not in required and key not in optional:
                raise SpecDocumentError(
                    f"unknown parameter {key!r} for family {family!r}"
                )
        for key in required:
            if key not in params:
                raise SpecDocumentError(
                    f"missing parameter {key!r} for family {family!r}"
                )

    domain = data["domain"]
    if (not isinstance(domain, (list, tuple)) or len(domain) != 2):
        raise SpecDocumentError("field 'domain' must be a [min, max] pair")
    lo = _require_number("domain[0]", domain[0])
    hi = _require_number("domain[1]", domain[1])
    if not lo < hi:
        raise SpecDocumentError(f"field 'domain' must increase, got [{lo}, {hi}]")

    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise SpecDocumentError(f"field 'n' must be an integer, got {n!r}")
    if n < 3:
        raise SpecDocumentError(f"field 'n' must be at least 3, got {n}")

    unit_speed = data["unit_speed"]
    if not isinstance(unit_speed, bool):
        raise SpecDocumentError(
            f"field 'unit_speed' must be true or false, got {unit_speed!r}"
        )

    return ProfileSpecDocument(
        family=family,
        params=params,
        domain=(lo, hi),
        n=n,
        unit_speed=unit_speed,
    )


def emit_document(doc: ProfileSpecDocument) -> str:
    """Serialize a document to canonical JSON (sorted keys)."""
    payload = {
        "family": doc.family,
        "params": {k: float(v) for k, v in doc.params.items()},
        "domain": [float(doc.domain[0]), float(doc.domain[1])],
        "n": int(doc.n),
        "unit_speed": bool(doc.unit_speed),
    }
    return json.dumps(payload, sort_keys=True)


def _build_turning(doc: ProfileSpecDocument) -> TurningAngleProfile:
    params = doc.params
    poly = [params[f"poly{i}"]
            for i in range(sum(1 for k in params if _POLY_KEY.match(k)))]
    count = sum(1 for k in params if k.endswith("_freq") and _FOURIER_KEY.match(k))
    fourier = [
        (params[f"fourier{i}_sin"], params[f"fourier{i}_cos"],
         params[f"fourier{i}_freq"])
        for i in range(count)
    ]
    return TurningAngleProfile(
        poly,
        fourier,
        f_ref=params.get("f_ref", 1.0),
        phi_ref=params.get("phi_ref", 0.0),
        r_ref=params.get("r_ref"),
        domain=doc.domain,
    )


def document_to_profile(doc: ProfileSpecDocument) -> ProfileCurve:
    """Build the profile a document describes.

    The declared unit-speed flag must match the built profile; for the
    integrated minimal family the declared domain must match the solved one.
    """
    family = doc.family
    params = doc.params
    if family == "line":
        profile: ProfileCurve = LineProfile(
            params["f0"], params["phi0"], params["df"], params["dphi"], doc.domain
        )
    elif family == "circle":
        profile = CircleProfile(
            params["radius"],
            center_f=params.get("center_f", 0.0),
            center_phi=params.get("center_phi", 0.0),
            phase=params.get("phase", 0.0),
            domain=doc.domain,
        )
    elif family == "plane":
        profile = plane_profile(params.get("height", 0.0), doc.domain)
    elif family == "cylinder":
        profile = cylinder_profile(params["radius"], doc.domain)
    elif family == "cone":
        profile = cone_profile(params["aperture"], doc.domain)
    elif family == "catenary":
        profile = CatenaryProfile(params["waist"], doc.domain)
    elif family == "minimal":
        solution = profile_solvers.solve_minimal_profile(
            doc.n,
            (params["f_min"], params["f_max"]),
            c1=params["c1"],
            sign=int(params.get("sign", 1.0)),
        )
        profile = solution.profile()
        scale = max(1.0, abs(doc.domain[0]), abs(doc.domain[1]))
        if (abs(profile.domain[0] - doc.domain[0]) > 1e-6 * scale
                or abs(profile.domain[1] - doc.domain[1]) > 1e-6 * scale):
            raise SpecDocumentError(
                f"field 'domain' {list(doc.domain)} does not match the "
                f"integrated window {list(profile.domain)}"
            )
    else:
        profile = _build_turning(doc)
    if profile.unit_speed != doc.unit_speed:
        raise SpecDocumentError(
            f"field 'unit_speed' is {doc.unit_speed} but the profile "
            f"parametrization is unit_speed={profile.unit_speed}"
        )
    return profile


def profile_to_document(profile: ProfileCurve, n: int) -> ProfileSpecDocument:
    """Describe a profile object as a document (canonical family names)."""
    family = profile.family
    if family == "line":
        params = {key: float(profile.params[key])
                  for key in ("f0", "phi0", "df", "dphi")}
    elif family == "circle":
        params = {key: float(profile.params[key])
                  for key in ("radius", "center_f", "center_phi", "phase")}
    elif family == "catenary":
        # The descending branch is congruent but not expressible: the wire
        # schema fixes the climbing parametrization.
        mid = 0.5 * (profile.domain[0] + profile.domain[1])
        if profile.jet(mid).phip.item() < 0.0:
            raise SpecDocumentError(
                "descending catenary parametrization has no document form"
            )
        params = {"waist": float(profile.params["waist"])}
    elif family == "minimal":
        params = {key: float(profile.params[key])
                  for key in ("c1", "sign", "f_min", "f_max")}
        if getattr(profile, "n", n) != n:
            raise SpecDocumentError(
                f"field 'n' is {n} but the profile was solved for n = "
                f"{getattr(profile, 'n')}"
            )
    elif family == "turning_angle":
        params = {}
        for i, coeff in enumerate(profile.params["poly"]):
            params[f"poly{i}"] = float(coeff)
        for i, (amp_s, amp_c, freq) in enumerate(profile.params["fourier"]):
            params[f"fourier{i}_sin"] = float(amp_s)
            params[f"fourier{i}_cos"] = float(amp_c)
            params[f"fourier{i}_freq"] = float(freq)
        params["f_ref"] = float(profile.params["f_ref"])
        params["phi_ref"] = float(profile.params["phi_ref"])
        params["r_ref"] = float(profile.params["r_ref"])
    else:
        raise SpecDocumentError(
            f"profile family {family!r} has no document form"
        )
    return ProfileSpecDocument(
        family=family,
        params=params,
        domain=(float(profile.domain[0]), float(profile.domain[1])),
        n=int(n),
        unit_speed=bool(profile.unit_speed),
    )


def load_profile(path: str) -> tuple[ProfileCurve, ProfileSpecDocument]:
    """Read a document file and build its profile."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise SpecDocumentError(f"cannot read spec file {path!r}: {exc}") from exc
    doc = parse_document(text)
    return document_to_profile(doc), doc
