"""Command line front end.

Every subcommand prints a run report (json by default) with the same shape:
command, inputs, outputs, tolerances, elapsed_seconds, version.  Reports are
deterministic for a fixed ROTHYP_SEED apart from the elapsed time.

Exit codes: 0 success, 1 domain or validation failure, 2 tolerance failure in
a verification mode, 64 usage error, 65 malformed profile document.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time

import numpy as np

from . import __version__
from .classifier import Tolerances, _sample_angles, classify
from .errors import RotHypError, SpecDocumentError
from .geometry_core import shape_spectrum
from .lk_operator import lk_gauss_closed, lk_gauss_numeric
from .profile_solvers import fixture_profiles, solve_minimal_profile
from .proof_audit import audit_table
from .specdoc import emit_document, load_profile, profile_to_document

__all__ = ["main", "build_parser"]

_LK_TOL = 1e-4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with the conventional usage exit code."""

    def error(self, message):  # noqa: A003 - argparse API
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(64)


def _dimension_list(text: str) -> list[int]:
    """Parse --n as a single integer or an inclusive lo..hi range."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an integer or lo..hi range, got {text!r}"
        ) from None
    if lo < 3:
        raise argparse.ArgumentTypeError("dimension must be at least 3")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty dimension range {text!r}")
    return list(range(lo, hi + 1))


def _order(text: str):
    if text == "auto":
        return "auto"
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an integer or 'auto', got {text!r}"
        ) from None
    if value < 0:
        raise argparse.ArgumentTypeError("operator order must be nonnegative")
    return value


def _single_dimension(dims: list[int], command: str) -> int:
    if len(dims) != 1:
        raise _UsageError(f"{command} expects a single --n value, not a range")
    return dims[0]


def _clean(value):
    """Replace non-finite floats so reports stay valid JSON."""
    if isinstance(value, dict):
        return {key: _clean(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(item) for item in value]
    if isinstance(value, (np.floating, float)):
        out = float(value)
        return out if math.isfinite(out) else None
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def _report(command: str, inputs: dict, outputs: dict, tolerances: dict,
            started: float) -> dict:
    return {
        "command": command,
        "inputs": _clean(inputs),
        "outputs": _clean(outputs),
        "tolerances": _clean(tolerances),
        "elapsed_seconds": time.perf_counter() - started,
        "version": __version__,
    }


def _text_lines(value, prefix: str = ""):
    if isinstance(value, dict):
        for key in sorted(value, key=str):
            yield from _text_lines(value[key], f"{prefix}{key}.")
    elif isinstance(value, list):
        for i, item in enumerate(value):
            yield from _text_lines(item, f"{prefix}{i}.")
    else:
        yield f"{prefix[:-1]} = {value}"


def _write_out(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit(report: dict, args, csv_table: tuple[list[str], list[list]] | None = None
          ) -> None:
    fmt = args.format
    if fmt == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    elif fmt == "text":
        text = "\n".join(_text_lines(report)) + "\n"
    else:
        if csv_table is None:
            raise _UsageError(
                f"csv output is not available for {report['command']}"
            )
        header, rows = csv_table
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(header)
        writer.writerows(rows)
        text = buffer.getvalue()
    _write_out(text, args.out)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_curvature(args, seed: int) -> int:
    started = time.perf_counter()
    n = _single_dimension(args.n, "curvature")
    profile, doc = load_profile(args.spec)
    grid = profile.grid(args.samples)
    jet = profile.jet(grid)
    spectrum = shape_spectrum(jet, n)
    rows = []
    for i, r in enumerate(grid):
        rows.append({
            "r": float(r),
            "f": float(jet.f[i]),
            "phi": float(jet.phi[i]),
            "kappa_meridian": float(spectrum.k_meridian[i]),
            "kappa_parallel": float(spectrum.k_parallel[i]),
            "mean": float(spectrum.mean[i]),
            "gauss_kronecker": float(spectrum.gauss_kronecker[i]),
        })
    outputs = {
        "family": doc.family,
        "points": rows,
        "max_abs_mean": float(np.max(np.abs(spectrum.mean))),
        "max_abs_gauss_kronecker": float(
            np.max(np.abs(spectrum.gauss_kronecker))),
    }
    report = _report(
        "curvature",
        {"spec": args.spec, "n": n, "samples": args.samples},
        outputs, {}, started,
    )
    header = ["r", "f", "phi", "kappa_meridian", "kappa_parallel", "mean",
              "gauss_kronecker"]
    table = [[repr(row[key]) for key in header] for row in rows]
    _emit(report, args, (header, table))
    return 0


def _cmd_lk(args, seed: int) -> int:
    started = time.perf_counter()
    n = _single_dimension(args.n, "lk")
    profile, doc = load_profile(args.spec)
    k = n - 3 if args.k == "auto" else args.k
    rng = np.random.default_rng(seed)
    grid = profile.grid(args.samples)
    errors = []
    for r in grid:
        angles = _sample_angles(rng, 1, n)[0]
        closed = lk_gauss_closed(profile, float(r), angles, k)
        numeric = lk_gauss_numeric(profile, float(r), angles, k,
                                   richardson=True)
        scale = max(1.0, float(np.linalg.norm(closed.vector)))
        errors.append(float(np.linalg.norm(closed.vector - numeric)) / scale)
    worst = int(np.argmax(errors))
    outputs = {
        "family": doc.family,
        "k": k,
        "max_rel_error": float(np.max(errors)),
        "mean_rel_error": float(np.mean(errors)),
        "worst_r": float(grid[worst]),
        "within_tolerance": bool(np.max(errors) <= _LK_TOL),
    }
    report = _report(
        "lk",
        {"spec": args.spec, "n": n, "k": k, "samples": args.samples,
         "seed": seed},
        outputs, {"max_rel_error": _LK_TOL}, started,
    )
    _emit(report, args)
    return 0 if outputs["within_tolerance"] else 2


def _cmd_classify(args, seed: int) -> int:
    started = time.perf_counter()
    profile, doc = load_profile(args.spec)
    tolerances = Tolerances(fit=args.tol_fit, flat=args.tol_flat,
                            minimal=args.tol_min)
    verdicts = {}
    for n in args.n:
        verdict = classify(profile, n, tolerances, samples=args.samples,
                           seed=seed)
        verdicts[str(n)] = {
            "case": verdict.case.name,
            "label": verdict.label,
            "diagnostics": dict(verdict.diagnostics),
        }
    report = _report(
        "classify",
        {"spec": args.spec, "n": args.n, "samples": args.samples,
         "seed": seed},
        {"family": doc.family, "verdicts": verdicts},
        {"fit": tolerances.fit, "flat": tolerances.flat,
         "minimal": tolerances.minimal, "constancy": tolerances.constancy},
        started,
    )
    _emit(report, args)
    return 0


def _cmd_solve_minimal(args, seed: int) -> int:
    started = time.perf_counter()
    n = _single_dimension(args.n, "solve-minimal")
    solution = solve_minimal_profile(
        n, (args.f_min, args.f_max), c1=args.c1, sign=args.sign,
        grid_points=args.grid_points,
    )
    outputs = {
        "c2": solution.c2,
        "f_neck": solution.f_neck,
        "requested_range": list(solution.requested_range),
        "effective_range": list(solution.effective_range),
        "truncated": solution.truncated,
        "hypergeometric_form_available":
            solution.hypergeometric_form_available,
        "max_abs_mean": float(np.max(np.abs(solution.mean_curv))),
        "grid_points": int(solution.r.size),
        "points": [
            {"r": float(r), "f": float(f), "phi": float(phi),
             "mean": float(hv), "gauss_kronecker": float(kv)}
            for r, f, phi, hv, kv in zip(
                solution.r, solution.f, solution.phi, solution.mean_curv,
                solution.gauss_curv)
        ],
    }
    report = _report(
        "solve-minimal",
        {"n": n, "c1": args.c1, "sign": args.sign,
         "f_range": [args.f_min, args.f_max],
         "grid_points": args.grid_points},
        outputs, {}, started,
    )
    if args.format == "csv":
        buffer = io.StringIO()
        solution.to_csv(buffer)
        _write_out(buffer.getvalue(), args.out)
    else:
        _emit(report, args)
    return 0


def _cmd_audit(args, seed: int) -> int:
    started = time.perf_counter()
    rows = audit_table(args.n)
    out_rows = []
    any_zero = False
    for row in rows:
        any_zero = any_zero or not row.nonvanishing
        out_rows.append({
            "n": row.n,
            "septic": row.seeds.septic,
            "octic": row.seeds.octic,
            "nonic": row.seeds.nonic,
            "factored_septic": row.seeds.factored_septic,
            "total": row.total,
            "nonvanishing": row.nonvanishing,
            "notes": list(row.notes),
        })
    report = _report(
        "audit",
        {"n": args.n},
        {"rows": out_rows, "all_nonvanishing": not any_zero},
        {}, started,
    )
    header = ["n", "septic", "octic", "nonic", "factored_septic", "total",
              "nonvanishing", "notes"]
    table = [
        [row["n"], row["septic"], row["octic"], row["nonic"],
         row["factored_septic"], row["total"], row["nonvanishing"],
         ";".join(row["notes"])]
        for row in out_rows
    ]
    _emit(report, args, (header, table))
    return 2 if any_zero else 0


def _cmd_fixtures(args, seed: int) -> int:
    started = time.perf_counter()
    n = _single_dimension(args.n, "fixtures")
    entries = {}
    for name, fixture in fixture_profiles(n).items():
        verdict = classify(fixture.profile, n, samples=args.samples,
                           seed=seed)
        entries[name] = {
            "expected": fixture.expected.label,
            "classified": verdict.label,
            "match": verdict.case is fixture.expected,
            "family": fixture.profile.family,
        }
    report = _report(
        "fixtures",
        {"n": n, "samples": args.samples, "seed": seed},
        {"fixtures": entries,
         "all_match": all(e["match"] for e in entries.values())},
        {}, started,
    )
    _emit(report, args)
    return 0


def _cmd_export(args, seed: int) -> int:
    started = time.perf_counter()
    n = _single_dimension(args.n, "export")
    if (args.fixture is None) == (args.spec is None):
        raise _UsageError("export needs exactly one of --fixture or --spec")
    if args.fixture is not None:
        fixtures = fixture_profiles(n)
        if args.fixture not in fixtures:
            raise _UsageError(
                f"unknown fixture {args.fixture!r}; choose from "
                f"{sorted(fixtures)}"
            )
        profile = fixtures[args.fixture].profile
    else:
        profile, _ = load_profile(args.spec)
    doc = profile_to_document(profile, n)
    _write_out(emit_document(doc) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# parser assembly


def _add_common(sub, *, spec: bool = False, samples: int | None = None,
                dims_default: str | None = None) -> None:
    if spec:
        sub.add_argument("--spec", required=True,
                         help="profile document (JSON file)")
    sub.add_argument("--n", type=_dimension_list,
                     default=_dimension_list(dims_default) if dims_default
                     else None,
                     required=dims_default is None,
                     help="ambient dimension, an integer or lo..hi range")
    if samples is not None:
        sub.add_argument("--samples", type=int, default=samples,
                         help="number of evaluation points")
    sub.add_argument("--out", default=None, help="write output to this file")
    sub.add_argument("--format", choices=("json", "text", "csv"),
                     default="json", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rothyp",
                     description="rotational hypersurface toolkit")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)

    sub = subparsers.add_parser(
        "curvature", help="principal curvature summary along a profile")
    _add_common(sub, spec=True, samples=64)
    sub.set_defaults(handler=_cmd_curvature)

    sub = subparsers.add_parser(
        "lk", help="verify the closed operator value against finite "
                   "differences")
    _add_common(sub, spec=True, samples=64)
    sub.add_argument("--k", type=_order, default="auto",
                     help="operator order (default n-3)")
    sub.set_defaults(handler=_cmd_lk)

    sub = subparsers.add_parser(
        "classify", help="decide which eigenfunction case a profile is in")
    _add_common(sub, spec=True, samples=64)
    sub.add_argument("--tol-fit", type=float, default=Tolerances.fit,
                     help="eigen fit residual tolerance")
    sub.add_argument("--tol-flat", type=float, default=Tolerances.flat,
                     help="flatness tolerance")
    sub.add_argument("--tol-min", type=float, default=Tolerances.minimal,
                     help="minimality tolerance")
    sub.set_defaults(handler=_cmd_classify)

    sub = subparsers.add_parser(
        "solve-minimal", help="integrate the zero-mean-curvature profile")
    _add_common(sub)
    sub.add_argument("--c1", type=float, default=1.0,
                     help="conserved-quantity constant")
    sub.add_argument("--sign", type=int, choices=(-1, 1), default=1,
                     help="height branch")
    sub.add_argument("--f-min", type=float, default=1.05,
                     help="lower radius of the window")
    sub.add_argument("--f-max", type=float, default=2.1,
                     help="upper radius of the window")
    sub.add_argument("--grid-points", type=int, default=129,
                     help="grid resolution")
    sub.set_defaults(handler=_cmd_solve_minimal)

    sub = subparsers.add_parser(
        "audit", help="exact integer check of the obstruction identity")
    _add_common(sub, dims_default="3..12")
    sub.set_defaults(handler=_cmd_audit)

    sub = subparsers.add_parser(
        "fixtures", help="classify the bundled witness profiles")
    _add_common(sub, samples=64)
    sub.set_defaults(handler=_cmd_fixtures)

    sub = subparsers.add_parser(
        "export", help="emit a canonical profile document")
    _add_common(sub)
    sub.add_argument("--fixture", default=None,
                     help="bundled fixture name to export")
    sub.add_argument("--spec", default=None,
                     help="existing document to canonicalize")
    sub.set_defaults(handler=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    if getattr(args, "handler", None) is None:
        sys.stderr.write("error: a subcommand is required\n")
        return 64
    seed_text = os.environ.get("ROTHYP_SEED", "0")
    try:
        seed = int(seed_text)
    except ValueError:
        sys.stderr.write(f"error: ROTHYP_SEED must be an integer, "
                         f"got {seed_text!r}\n")
        return 64
    try:
        return args.handler(args, seed)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 64
    except SpecDocumentError as exc:
        sys.stderr.write(f"spec error: {exc}\n")
        return 65
    except RotHypError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
