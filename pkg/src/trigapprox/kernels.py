"""Coefficient sequences psi(k) and phase sequences beta_k of the convolution kernel.

The kernel of a convolution class has the cosine series

    Psi_beta(t) ~ sum_{k>=1} psi(k) cos(k t - beta_k pi / 2)

and every sharp-error formula in this package only needs ``psi(k)**2``
summed over blocks of indices.  Infinite sums are always closed by a
certified majorant of the tail ``sum_{k>=K} psi(k)**2``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.special import zeta

from .exceptions import ValidationError

__all__ = [
    "PsiSequence",
    "BetaSequence",
    "KernelHarmonic",
    "make_psi",
    "tail_bound",
    "kernel_harmonic",
    "parse_psi",
]

_BUILTIN = ("geometric", "power")


@dataclass(frozen=True)
class PsiSequence:
    """Kernel coefficients psi(k), k >= 1, with a tail majorant.

    Use :func:`make_psi` to build one; the constructor does not validate.
    """

    family: str
    param: float | None = None
    eval_fn: Callable | None = field(default=None, repr=False, compare=False)
    tail_fn: Callable | None = field(default=None, repr=False, compare=False)

    @property
    def exact_tails(self) -> bool:
        """True when progression sums of psi**2 are known in closed form."""
        return self.family in _BUILTIN

    def __call__(self, k):
        k_arr = np.asarray(k, dtype=float)
        if self.family == "geometric":
            out = self.param ** k_arr
        elif self.family == "power":
            out = k_arr ** (-self.param)
        else:
            out = np.asarray(self.eval_fn(np.asarray(k)), dtype=float)
        return out if out.ndim else float(out)

    def psi2(self, k):
        """Squared coefficients psi(k)**2 (vectorised)."""
        k_arr = np.asarray(k, dtype=float)
        if self.family == "geometric":
            out = self.param ** (2.0 * k_arr)
        elif self.family == "power":
            out = k_arr ** (-2.0 * self.param)
        else:
            v = np.asarray(self.eval_fn(np.asarray(k)), dtype=float)
            out = v * v
        return out if out.ndim else float(out)

    def tail(self, K: int) -> float:
        """Upper bound on sum_{k>=K} psi(k)**2 (exact for the geometric family)."""
        if K < 1:
            raise ValidationError("K must be >= 1")
        if self.family == "geometric":
            q = self.param
            return q ** (2 * K) / (1.0 - q * q)
        if self.family == "power":
            s = 2.0 * self.param
            return K ** (-s) + K ** (1.0 - s) / (s - 1.0)
        return float(self.tail_fn(K))

    def progression_sum(self, start, step: int):
        """Exact value of sum_{i>=0} psi(start + i*step)**2 for built-in families.

        ``start`` may be an integer array.  Custom sequences have no closed
        form and raise :class:`ValidationError`.
        """
        start = np.asarray(start, dtype=float)
        if self.family == "geometric":
            lq = math.log(self.param)
            out = np.exp(2.0 * start * lq) / -math.expm1(2.0 * step * lq)
        elif self.family == "power":
            s = 2.0 * self.param
            out = step ** (-s) * zeta(s, start / step)
        else:
            raise ValidationError("progression sums need a built-in psi family")
        return out if out.ndim else float(out)

    def derivative_bound(self, start, step: int, order: int):
        """Majorant of ``(-Delta)**order`` applied to m -> psi(start + m*step)**2 at m = 0.

        Both built-in sequences are completely monotone in m, so the p-th
        difference is non-negative, non-increasing, and bounded by
        ``(-1)**p`` times the p-th derivative at the left endpoint.
        """
        start = np.asarray(start, dtype=float)
        if self.family == "geometric":
            rho = self.param ** (2 * step)
            out = self.param ** (2.0 * start) * (1.0 - rho) ** order
        elif self.family == "power":
            s = 2.0 * self.param
            coef = math.prod(s + i for i in range(order)) * float(step) ** order
            out = coef * start ** (-s - order)
        else:
            raise ValidationError("difference bounds need a built-in psi family")
        return out


def make_psi(family: str, param: float | None = None, *,
             eval_fn: Callable | None = None,
             tail_fn: Callable | None = None) -> PsiSequence:
    """Build a validated :class:`PsiSequence`.

    Parameters
    ----------
    family : {"geometric", "power", "custom"}
        ``geometric`` is psi(k) = q**k, ``power`` is psi(k) = k**(-r).
    param : float
        q for the geometric family, r for the power family.
    eval_fn, tail_fn : callable
        Required for ``custom``: a vectorised map k -> psi(k) and a map
        K -> upper bound on sum_{k>=K} psi(k)**2.  No bound is invented for
        custom sequences.
    """
    if family == "geometric":
        q = _as_real(param, "q")
        if not 0.0 < q < 1.0:
            raise ValidationError("q must lie in (0,1)")
        return PsiSequence("geometric", q)
    if family == "power":
        r = _as_real(param, "r")
        if not r > 0.5:
            raise ValidationError("r must exceed 1/2")
        return PsiSequence("power", r)
    if family == "custom":
        if eval_fn is None or tail_fn is None:
            raise ValidationError("custom psi needs both eval_fn and tail_fn")
        psi = PsiSequence("custom", None, eval_fn, tail_fn)
        for K in (1, 10, 100):
            partial = float(np.sum(psi.psi2(np.arange(K, K + 1001))))
            if not tail_fn(K) >= partial:
                raise ValidationError(
                    f"tail_fn({K}) = {tail_fn(K)!r} is below the partial sum {partial!r}")
        return psi
    raise ValidationError(f"unknown psi family {family!r}")


def _as_real(value, name: str) -> float:
    if value is None:
        raise ValidationError(f"{name} is required")
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite")
    return value


def tail_bound(psi: PsiSequence, K: int) -> float:
    """Return B >= sum_{k>=K} psi(k)**2."""
    return psi.tail(K)


_PSI_RE = re.compile(r"^\s*(geometric|power)\s*:\s*([a-z]+)\s*=\s*(\S+)\s*$")


def parse_psi(text: str) -> PsiSequence:
    """Parse ``geometric:q=<real>`` or ``power:r=<real>``."""
    m = _PSI_RE.match(text)
    if not m:
        raise ValidationError(
            f"cannot parse psi spec {text!r}; expected geometric:q=<real> or power:r=<real>")
    family, key, raw = m.groups()
    expected = "q" if family == "geometric" else "r"
    if key != expected:
        raise ValidationError(f"{family} family takes parameter {expected!r}, got {key!r}")
    try:
        value = float(raw)
    except ValueError:
        raise ValidationError(f"not a number: {raw!r}") from None
    return make_psi(family, value)


@dataclass(frozen=True)
class BetaSequence:
    """Phase sequence beta_k, defined for every k >= 1 (vectorised callable)."""

    eval_fn: Callable = field(repr=False)
    label: str = "custom"

    def __call__(self, k):
        k_arr = np.asarray(k)
        out = np.broadcast_to(np.asarray(self.eval_fn(k_arr), dtype=float), k_arr.shape)
        return out.copy() if out.ndim else float(out)

    @classmethod
    def constant(cls, beta: float) -> "BetaSequence":
        beta = float(beta)
        return cls(lambda k: np.full(np.shape(k), beta), label=f"constant:{beta!r}")

    @classmethod
    def random(cls, seed: int, low: float = -4.0, high: float = 4.0,
               period: int = 4099) -> "BetaSequence":
        """Pseudo-random phases, total via a periodic table of draws."""
        table = np.random.default_rng(seed).uniform(low, high, period)
        return cls(lambda k: table[np.asarray(k) % period], label=f"random:{seed}")


@dataclass(frozen=True)
class KernelHarmonic:
    k: int
    cos_coeff: float
    sin_coeff: float


def kernel_harmonic(psi: PsiSequence, beta: BetaSequence, k: int) -> KernelHarmonic:
    """Coefficients of cos kt and sin kt in psi(k) cos(k t - beta_k pi/2)."""
    if k < 1:
        raise ValidationError("k must be >= 1")
    p = psi(k)
    phase = beta(k) * math.pi / 2.0
    return KernelHarmonic(k, p * math.cos(phase), p * math.sin(phase))
