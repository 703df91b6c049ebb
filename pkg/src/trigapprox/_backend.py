"""Dispatch between the compiled core and the numpy fallback.

The extension is picked at import when it was built; :func:`use_backend`
switches explicitly (benchmarks and the backend-agreement tests use it).
"""

from __future__ import annotations

import numpy as np

from . import _pycore

try:
    from . import _core as _ext
except ImportError:  # extension not built
    _ext = None

_FAMILY_CODES = {"geometric": 0, "power": 1}
_active = "compiled" if _ext is not None else "python"


def available() -> tuple[str, ...]:
    return ("compiled", "python") if _ext is not None else ("python",)


def current() -> str:
    return _active


def use_backend(name: str) -> str:
    """Select ``"compiled"`` or ``"python"``; returns the previous choice."""
    global _active
    if name not in ("compiled", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and _ext is None:
        raise RuntimeError("compiled extension is not available")
    prev, _active = _active, name
    return prev


def _compiled_for(psi) -> bool:
    return _active == "compiled" and psi.family in _FAMILY_CODES


def dft_coeffs(samples, n):
    if _active == "compiled":
        return _ext.dft_coeffs(np.ascontiguousarray(samples, dtype=float), int(n))
    return _pycore.dft_coeffs(samples, n)


def trig_eval(a0, a, b, xs):
    if _active == "compiled":
        return _ext.trig_eval(float(a0), np.ascontiguousarray(a, dtype=float),
                              np.ascontiguousarray(b, dtype=float),
                              np.ascontiguousarray(xs, dtype=float))
    return _pycore.trig_eval(a0, a, b, xs)


def general_blocks(psi, n, lam_j, mu_j, theta, m_lo, m_hi):
    if m_hi < m_lo:
        return 0.0
    if _compiled_for(psi):
        return _ext.general_blocks(_FAMILY_CODES[psi.family], psi.param, n,
                                   np.ascontiguousarray(lam_j, dtype=float),
                                   np.ascontiguousarray(mu_j, dtype=float),
                                   float(theta), int(m_lo), int(m_hi))
    return _pycore.general_blocks(psi.psi2, n, lam_j, mu_j, theta, m_lo, m_hi)


def interp_blocks(psi, n, theta, m_lo, m_hi):
    if m_hi < m_lo:
        return 0.0
    if _compiled_for(psi):
        return _ext.interp_blocks(_FAMILY_CODES[psi.family], psi.param, n,
                                  float(theta), int(m_lo), int(m_hi))
    return _pycore.interp_blocks(psi.psi2, n, theta, m_lo, m_hi)


def block_sum(psi, n, m_lo, m_hi, step=1):
    if m_hi < m_lo:
        return 0.0
    if _compiled_for(psi):
        return _ext.block_sum(_FAMILY_CODES[psi.family], psi.param, n,
                              int(m_lo), int(m_hi), int(step))
    return _pycore.block_sum(psi.psi2, n, m_lo, m_hi, step)
