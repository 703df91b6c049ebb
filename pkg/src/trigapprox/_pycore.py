"""Pure numpy versions of the loops in ``_core.pyx``.

These take ``psi2``, a vectorised map k -> psi(k)**2, instead of a family
code, so they also serve custom sequences when the extension is present.
"""

from __future__ import annotations

import math

import numpy as np

_CHUNK_TERMS = 1 << 20


def dft_coeffs(samples, n: int):
    samples = np.asarray(samples, dtype=float)
    N = 2 * n + 1
    if samples.shape[0] != N:
        raise ValueError("expected 2n+1 samples")
    r = np.arange(N)
    ctab = np.cos(2.0 * math.pi * r / N)
    stab = np.sin(2.0 * math.pi * r / N)
    # exact index reduction (i*k mod N) keeps node angles in [0, 2 pi)
    idx = np.outer(np.arange(n + 1), r) % N
    a = 2.0 * (ctab[idx] @ samples) / N
    b = 2.0 * (stab[idx] @ samples) / N
    b[0] = 0.0
    return a, b


def trig_eval(a0: float, a, b, xs):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    xs = np.asarray(xs, dtype=float)
    k = np.arange(1, a.shape[0] + 1, dtype=float)
    out = np.empty(xs.shape[0])
    step = max(1, _CHUNK_TERMS // max(1, k.shape[0]))
    for lo in range(0, xs.shape[0], step):
        kx = np.outer(xs[lo:lo + step], k)
        out[lo:lo + step] = 0.5 * a0 + np.cos(kx) @ a + np.sin(kx) @ b
    return out


def _chunks(n: int, m_lo: int, m_hi: int, step: int = 1):
    per = max(1, _CHUNK_TERMS // (2 * n + 1))
    m = m_lo
    while m <= m_hi:
        stop = min(m_hi, m + (per - 1) * step)
        yield np.arange(m, stop + 1, step, dtype=np.int64)
        m = stop + step


def _blocks(psi2, n: int, ms):
    N = 2 * n + 1
    j = np.arange(-n, n + 1)
    return psi2(ms[:, None] * N + j[None, :])


def general_blocks(psi2, n, lam_j, mu_j, theta, m_lo, m_hi):
    lam_j = np.asarray(lam_j, dtype=float)
    mu_j = np.asarray(mu_j, dtype=float)
    total = 0.0
    for ms in _chunks(n, m_lo, m_hi):
        c = np.cos(ms * theta)[:, None]
        s = np.sin(ms * theta)[:, None]
        w = (c - lam_j) ** 2 + (s + mu_j) ** 2
        total += math.fsum((w * _blocks(psi2, n, ms)).sum(axis=1))
    return total


def interp_blocks(psi2, n, theta, m_lo, m_hi):
    total = 0.0
    for ms in _chunks(n, m_lo, m_hi):
        sh = np.sin(0.5 * ms * theta)
        total += math.fsum(sh * sh * _blocks(psi2, n, ms).sum(axis=1))
    return total


def block_sum(psi2, n, m_lo, m_hi, step):
    total = 0.0
    for ms in _chunks(n, m_lo, m_hi, step):
        total += math.fsum(_blocks(psi2, n, ms).sum(axis=1))
    return total
