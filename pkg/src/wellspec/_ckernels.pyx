"""Compiled hot loops: momentum density on a grid and compensated series sums.

Mirrors :mod:`wellspec._pykernels` term for term.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, fabs, sin

cnp.import_array()

cdef double PI = 3.141592653589793
cdef double TAYLOR_WINDOW = 1e-4

# series kinds, shared with _pykernels
ODD_SQUARES = 0
SUM1 = 1
SUM2 = 2


cdef inline double _density(long n, double xi) noexcept nogil:
    cdef double a = n * PI
    cdef double ax = fabs(xi)
    cdef double eps = ax - a
    cdef double e2, q, s, d, pref
    pref = 4.0 * n * n * PI
    if fabs(eps) < TAYLOR_WINDOW:
        e2 = eps * eps
        q = 0.25 - e2 / 48.0 + e2 * e2 / 1440.0
        d = ax + a
        return pref * q / (d * d)
    if n % 2:
        s = cos(0.5 * ax)
    else:
        s = sin(0.5 * ax)
    d = (ax - a) * (ax + a)
    return pref * s * s / (d * d)


def density_array(long n, xi):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] x = np.ascontiguousarray(xi, dtype=np.float64).ravel()
    cdef Py_ssize_t i, m = x.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(m, dtype=np.float64)
    cdef double[::1] xv = x
    cdef double[::1] ov = out
    with nogil:
        for i in range(m):
            ov[i] = _density(n, xv[i])
    return out.reshape(np.shape(xi))


cdef inline double _term(int kind, double k) noexcept nogil:
    cdef double u = 2.0 * k - 1.0
    cdef double v = 2.0 * k + 1.0
    cdef double uv
    if kind == 0:
        return 1.0 / (u * u)
    uv = u * v
    if kind == 1:
        return 4.0 * k * k / (uv * uv)
    return 1.0 / (uv * uv)


def series_sum(int kind, long K):
    """Neumaier-compensated sum of terms k = 1..K in ascending order."""
    if kind < 0 or kind > 2:
        raise ValueError(f"unknown series kind {kind}")
    cdef double s = 0.0, c = 0.0, t, term
    cdef long k
    with nogil:
        for k in range(1, K + 1):
            term = _term(kind, <double>k)
            t = s + term
            if fabs(s) >= fabs(term):
                c += (s - t) + term
            else:
                c += (term - t) + s
            s = t
    return s + c
