# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: discrete coefficient sums, trig evaluation, block series.

Family codes: 0 = geometric (psi(k) = q**k), 1 = power (psi(k) = k**-r).
Every function mirrors one in ``_pycore`` and must return the same value
up to rounding.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, pow, M_PI

cnp.import_array()


cdef inline double _psi2(int family, double param, double k) nogil:
    if family == 0:
        return pow(param, 2.0 * k)
    return pow(k, -2.0 * param)


def dft_coeffs(const double[::1] samples, int n):
    cdef int N = 2 * n + 1
    cdef int i, k, r
    cdef double sa, sb
    if samples.shape[0] != N:
        raise ValueError("expected 2n+1 samples")
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ctab = np.empty(N)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] stab = np.empty(N)
    for r in range(N):
        ctab[r] = cos(2.0 * M_PI * r / N)
        stab[r] = sin(2.0 * M_PI * r / N)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] a = np.zeros(n + 1)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] b = np.zeros(n + 1)
    for k in range(n + 1):
        sa = 0.0
        sb = 0.0
        r = 0
        for i in range(N):
            sa += samples[i] * ctab[r]
            sb += samples[i] * stab[r]
            r += k
            if r >= N:
                r -= N
        a[k] = 2.0 * sa / N
        b[k] = 2.0 * sb / N
    b[0] = 0.0
    return a, b


def trig_eval(double a0, const double[::1] a, const double[::1] b, const double[::1] xs):
    cdef Py_ssize_t deg = a.shape[0]
    cdef Py_ssize_t nx = xs.shape[0]
    cdef Py_ssize_t i, k
    cdef double x, acc
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(nx)
    for i in range(nx):
        x = xs[i]
        acc = 0.0
        for k in range(deg):
            acc += a[k] * cos((k + 1) * x) + b[k] * sin((k + 1) * x)
        out[i] = 0.5 * a0 + acc
    return out


def general_blocks(int family, double param, int n, const double[::1] lam_j,
                   const double[::1] mu_j, double theta, long m_lo, long m_hi):
    """sum_{m=m_lo}^{m_hi} sum_{|j|<=n} ((cos m theta - lam_j)^2
    + (sin m theta + mu_j)^2) psi(mN+j)^2; weight arrays are indexed j + n."""
    cdef long N = 2 * n + 1
    cdef long m
    cdef int j
    cdef double c, s, blk, w, dc, ds, total = 0.0, comp = 0.0, y, t
    if lam_j.shape[0] != N or mu_j.shape[0] != N:
        raise ValueError("weight arrays need 2n+1 entries")
    with nogil:
        for m in range(m_lo, m_hi + 1):
            c = cos(m * theta)
            s = sin(m * theta)
            blk = 0.0
            for j in range(-n, n + 1):
                dc = c - lam_j[j + n]
                ds = s + mu_j[j + n]
                w = dc * dc + ds * ds
                blk += w * _psi2(family, param, <double>(m * N + j))
            y = blk - comp
            t = total + y
            comp = (t - total) - y
            total = t
    return total


def interp_blocks(int family, double param, int n, double theta, long m_lo, long m_hi):
    """sum_{m=m_lo}^{m_hi} sin^2(m theta / 2) * block_m."""
    cdef long N = 2 * n + 1
    cdef long m
    cdef int j
    cdef double sh, blk, total = 0.0, comp = 0.0, y, t
    with nogil:
        for m in range(m_lo, m_hi + 1):
            sh = sin(0.5 * m * theta)
            blk = 0.0
            for j in range(-n, n + 1):
                blk += _psi2(family, param, <double>(m * N + j))
            y = sh * sh * blk - comp
            t = total + y
            comp = (t - total) - y
            total = t
    return total


def block_sum(int family, double param, int n, long m_lo, long m_hi, long step):
    """sum of block_m over m = m_lo, m_lo + step, ..., <= m_hi."""
    cdef long N = 2 * n + 1
    cdef long m
    cdef int j
    cdef double blk, total = 0.0, comp = 0.0, y, t
    with nogil:
        m = m_lo
        while m <= m_hi:
            blk = 0.0
            for j in range(-n, n + 1):
                blk += _psi2(family, param, <double>(m * N + j))
            y = blk - comp
            t = total + y
            comp = (t - total) - y
            total = t
            m += step
    return total
