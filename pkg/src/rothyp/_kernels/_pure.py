"""Pure-Python chart-point kernels.

Reference implementations of the small numeric routines that sit inside
finite-difference stencils and sampling loops.  The compiled backend in
``_speed.pyx`` mirrors these signatures exactly; both operate on plain
floats and 1-d float64 arrays.

Angle conventions: a chart on an n-dimensional ambient space carries
``n - 2`` angles.  ``unit_direction`` maps them to the unit vector u in
the first n-1 coordinates; the immersion is (f*u, phi).
"""

import math

import numpy as np

BACKEND = "python"


def unit_direction(angles):
    """Spherical unit vector u in R^(n-1) for n-2 chart angles."""
    m = len(angles)
    u = np.empty(m + 1)
    tail = 1.0
    # build from the last component down: u[j] = sin(a[j-1]) * prod cos(a[j:])
    u[m] = math.sin(angles[m - 1]) if m else 1.0
    for j in range(m - 1, 0, -1):
        tail *= math.cos(angles[j])
        u[j] = math.sin(angles[j - 1]) * tail
    if m:
        u[0] = tail * math.cos(angles[0])
    return u


def immersion_point(fval, phival, angles):
    """Ambient coordinates (f*u, phi) of the chart point."""
    u = unit_direction(angles)
    out = np.empty(len(u) + 1)
    out[:-1] = fval * u
    out[-1] = phival
    return out


def gauss_point(eps, fp, php, w, angles):
    """Unit normal eps*(phi'*u, -f')/w for the chart point."""
    u = unit_direction(angles)
    out = np.empty(len(u) + 1)
    out[:-1] = (eps * php / w) * u
    out[-1] = -eps * fp / w
    return out


def frame_rows(fp, php, w, angles):
    """Orthonormal tangent frame, one row per direction.

    Row 0 is the meridian direction (f'*u, phi')/w; row q-1 for
    q = 2..n-1 is the unit angular direction obtained by normalizing
    the angle-q-1 coordinate field by its metric factor.
    """
    m = len(angles)
    n = m + 2
    u = unit_direction(angles)
    rows = np.zeros((n - 1, n))
    rows[0, :-1] = (fp / w) * u
    rows[0, -1] = php / w
    sines = np.sin(angles)
    cosines = np.cos(angles)
    for q in range(2, n):
        a = q - 2  # angle index of this direction
        sa = sines[a]
        # component 0: -sin(a) * prod(cos(angles[0:a]))
        prod = 1.0
        for i in range(a):
            prod *= cosines[i]
        rows[q - 1, 0] = -sa * prod
        # components 1..a: -sin(angles[m-1]) * prod(cos(angles[m:a])) * sin(a)
        for comp in range(1, a + 1):
            prod = 1.0
            for i in range(comp, a):
                prod *= cosines[i]
            rows[q - 1, comp] = -sines[comp - 1] * prod * sa
        rows[q - 1, a + 1] = cosines[a]
    return rows


def form_diagonals(eps, fval, fp, fpp, php, phpp, w, angles):
    """Diagonals of the first and second fundamental forms.

    Returns (gdiag, hdiag), each of length n-1, ordered (radial,
    angle_1, ..., angle_{n-2}).  The second form is taken against the
    cofactor cross-product normal.
    """
    m = len(angles)
    gdiag = np.empty(m + 1)
    hdiag = np.empty(m + 1)
    gdiag[0] = w * w
    hdiag[0] = eps * (fpp * php - fp * phpp) / w
    tail = 1.0
    tails = np.empty(m)
    for j in range(m - 1, -1, -1):
        tails[j] = tail
        tail *= math.cos(angles[j])
    # tails[j] = prod cos(angles[j+1:]) -> metric factor for angle j+1 row.
    for j in range(m):
        t2 = tails[j] * tails[j]
        gdiag[j + 1] = fval * fval * t2
        hdiag[j + 1] = -eps * fval * php * t2 / w
    return gdiag, hdiag


def elem_sym_table(values):
    """All elementary symmetric functions e_0..e_m of the inputs."""
    m = len(values)
    table = np.zeros(m + 1)
    table[0] = 1.0
    for i in range(m):
        v = values[i]
        top = i + 1
        for j in range(top, 0, -1):
            table[j] += v * table[j - 1]
    return table
