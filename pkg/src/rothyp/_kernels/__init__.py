"""Kernel backend selection.

Prefers the compiled extension when it imported cleanly; falls back to
the pure-Python implementations otherwise.  Set ROTHYP_PURE_PYTHON=1 to
force the fallback (useful for benchmarking and debugging).
"""

import os

from . import _pure

if os.environ.get("ROTHYP_PURE_PYTHON", "").strip() not in ("", "0"):
    _impl = _pure
else:
    try:
        from . import _speed as _impl
    except ImportError:
        _impl = _pure

backend_name = _impl.BACKEND

unit_direction = _impl.unit_direction
immersion_point = _impl.immersion_point
gauss_point = _impl.gauss_point
frame_rows = _impl.frame_rows
form_diagonals = _impl.form_diagonals
elem_sym_table = _impl.elem_sym_table

pure = _pure

__all__ = [
    "backend_name",
    "unit_direction",
    "immersion_point",
    "gauss_point",
    "frame_rows",
    "form_diagonals",
    "elem_sym_table",
    "pure",
]
