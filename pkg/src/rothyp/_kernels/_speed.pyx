# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled chart-point kernels; mirrors _pure.py function for function."""

from libc.math cimport sin, cos

import numpy as np

BACKEND = "compiled"


def unit_direction(angles):
    cdef double[::1] a = np.ascontiguousarray(angles, dtype=np.float64)
    cdef Py_ssize_t m = a.shape[0]
    out = np.empty(m + 1)
    cdef double[::1] u = out
    cdef double tail = 1.0
    cdef Py_ssize_t j
    u[m] = sin(a[m - 1])
    for j in range(m - 1, 0, -1):
        tail *= cos(a[j])
        u[j] = sin(a[j - 1]) * tail
    u[0] = tail * cos(a[0])
    return out


def immersion_point(double fval, double phival, angles):
    cdef double[::1] a = np.ascontiguousarray(angles, dtype=np.float64)
    cdef Py_ssize_t m = a.shape[0]
    out = np.empty(m + 2)
    cdef double[::1] x = out
    cdef double tail = 1.0
    cdef Py_ssize_t j
    x[m] = fval * sin(a[m - 1])
    for j in range(m - 1, 0, -1):
        tail *= cos(a[j])
        x[j] = fval * sin(a[j - 1]) * tail
    x[0] = fval * tail * cos(a[0])
    x[m + 1] = phival
    return out


def gauss_point(double eps, double fp, double php, double w, angles):
    cdef double[::1] a = np.ascontiguousarray(angles, dtype=np.float64)
    cdef Py_ssize_t m = a.shape[0]
    out = np.empty(m + 2)
    cdef double[::1] g = out
    cdef double scale = eps * php / w
    cdef double tail = 1.0
    cdef Py_ssize_t j
    g[m] = scale * sin(a[m - 1])
    for j in range(m - 1, 0, -1):
        tail *= cos(a[j])
        g[j] = scale * sin(a[j - 1]) * tail
    g[0] = scale * tail * cos(a[0])
    g[m + 1] = -eps * fp / w
    return out


def frame_rows(double fp, double php, double w, angles):
    cdef double[::1] a = np.ascontiguousarray(angles, dtype=np.float64)
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = m + 2
    out = np.zeros((n - 1, n))
    cdef double[:, ::1] rows = out
    cdef double tail = 1.0
    cdef double sa, prod
    cdef Py_ssize_t j, q, i, comp, aidx
    rows[0, m] = (fp / w) * sin(a[m - 1])
    for j in range(m - 1, 0, -1):
        tail *= cos(a[j])
        rows[0, j] = (fp / w) * sin(a[j - 1]) * tail
    rows[0, 0] = (fp / w) * tail * cos(a[0])
    rows[0, n - 1] = php / w
    for q in range(2, n):
        aidx = q - 2
        sa = sin(a[aidx])
        prod = 1.0
        for i in range(aidx):
            prod *= cos(a[i])
        rows[q - 1, 0] = -sa * prod
        for comp in range(1, aidx + 1):
            prod = 1.0
            for i in range(comp, aidx):
                prod *= cos(a[i])
            rows[q - 1, comp] = -sin(a[comp - 1]) * prod * sa
        rows[q - 1, aidx + 1] = cos(a[aidx])
    return out


def form_diagonals(double eps, double fval, double fp, double fpp,
                   double php, double phpp, double w, angles):
    cdef double[::1] a = np.ascontiguousarray(angles, dtype=np.float64)
    cdef Py_ssize_t m = a.shape[0]
    gout = np.empty(m + 1)
    hout = np.empty(m + 1)
    cdef double[::1] gdiag = gout
    cdef double[::1] hdiag = hout
    cdef double tail = 1.0
    cdef double t2
    cdef Py_ssize_t j
    gdiag[0] = w * w
    hdiag[0] = eps * (fpp * php - fp * phpp) / w
    for j in range(m - 1, -1, -1):
        t2 = tail * tail
        gdiag[j + 1] = fval * fval * t2
        hdiag[j + 1] = -eps * fval * php * t2 / w
        tail *= cos(a[j])
    return gout, hout


def elem_sym_table(values):
    cdef double[::1] v = np.ascontiguousarray(values, dtype=np.float64)
    cdef Py_ssize_t m = v.shape[0]
    out = np.zeros(m + 1)
    cdef double[::1] table = out
    cdef Py_ssize_t i, j
    table[0] = 1.0
    for i in range(m):
        for j in range(i + 1, 0, -1):
            table[j] += v[i] * table[j - 1]
    return out
