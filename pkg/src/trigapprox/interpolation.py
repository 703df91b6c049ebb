"""Trigonometric interpolation on the 2n+1 equispaced nodes 2k pi/(2n+1).

Holds the finite trigonometric polynomial type, Fourier-Lagrange
(discrete) coefficients, the interpolant, the aliasing map from true
Fourier coefficients to discrete ones, and synthesis of convolution-class
members in coefficient space.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import _backend
from .exceptions import MembershipError, ShapeError, TruncationError, ValidationError
from .kernels import BetaSequence, PsiSequence

__all__ = [
    "TrigPolynomial",
    "DiscreteCoeffs",
    "FourierSeries",
    "ClassMemberSpec",
    "nodes",
    "fourier_lagrange_coeffs",
    "eval_interpolant",
    "aliased_coeffs",
    "synthesize_f",
]

MEMBERSHIP_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class TrigPolynomial:
    """``a0/2 + sum_{k=1}^N (a[k-1] cos kx + b[k-1] sin kx)``."""

    a0: float
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float).reshape(-1)
        b = np.asarray(self.b, dtype=float).reshape(-1)
        if a.shape != b.shape:
            raise ShapeError(f"cosine and sine coefficient counts differ: {a.size} != {b.size}")
        object.__setattr__(self, "a0", float(self.a0))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def degree(self) -> int:
        return int(self.a.size)

    def __call__(self, x):
        xs = np.atleast_1d(np.asarray(x, dtype=float))
        out = _backend.trig_eval(self.a0, self.a, self.b, xs.reshape(-1)).reshape(xs.shape)
        return float(out[0]) if np.ndim(x) == 0 else out

    def l2_norm(self) -> float:
        """L2 norm over one period [-pi, pi] (Parseval)."""
        sq = 0.5 * self.a0 ** 2 + float(np.sum(self.a ** 2 + self.b ** 2))
        return math.sqrt(math.pi * sq)

    def padded(self, degree: int) -> "TrigPolynomial":
        if degree < self.degree:
            raise ShapeError("cannot pad to a smaller degree")
        extra = degree - self.degree
        return TrigPolynomial(self.a0, np.pad(self.a, (0, extra)), np.pad(self.b, (0, extra)))

    def __add__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        d = max(self.degree, other.degree)
        p, q = self.padded(d), other.padded(d)
        return TrigPolynomial(p.a0 + q.a0, p.a + q.a, p.b + q.b)

    def __mul__(self, c: float) -> "TrigPolynomial":
        return TrigPolynomial(c * self.a0, c * self.a, c * self.b)

    __rmul__ = __mul__

    def reflected(self, x: float) -> "TrigPolynomial":
        """The polynomial s -> p(x - s)."""
        k = np.arange(1, self.degree + 1)
        c, s = np.cos(k * x), np.sin(k * x)
        return TrigPolynomial(self.a0, self.a * c + self.b * s, self.a * s - self.b * c)

    def to_dict(self) -> dict:
        return {"a0": self.a0, "a": self.a.tolist(), "b": self.b.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "TrigPolynomial":
        return cls(data["a0"], data["a"], data["b"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "TrigPolynomial":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True, eq=False)
class DiscreteCoeffs:
    """Fourier-Lagrange coefficients a_0..a_n and b_1..b_n of order n."""

    n: int
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float).reshape(-1)
        b = np.asarray(self.b, dtype=float).reshape(-1)
        if a.size != self.n + 1 or b.size != self.n:
            raise ShapeError(f"need {self.n + 1} cosine and {self.n} sine coefficients, "
                             f"got {a.size} and {b.size}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def as_polynomial(self) -> TrigPolynomial:
        return TrigPolynomial(self.a[0], self.a[1:], self.b)


def nodes(n: int) -> np.ndarray:
    """Interpolation nodes x_k = 2 k pi / (2n+1), k = 0..2n."""
    if n < 1:
        raise ValidationError("n must be >= 1")
    N = 2 * n + 1
    return 2.0 * math.pi * np.arange(N) / N


def fourier_lagrange_coeffs(samples, n: int) -> DiscreteCoeffs:
    """Discrete coefficients from the samples ``f(nodes(n))`` (direct sums)."""
    samples = np.asarray(samples, dtype=float).reshape(-1)
    if samples.size != 2 * n + 1:
        raise ShapeError(f"expected {2 * n + 1} samples for n={n}, got {samples.size}")
    a, b = _backend.dft_coeffs(samples, n)
    return DiscreteCoeffs(n, a, b[1:])


def eval_interpolant(coeffs: DiscreteCoeffs, x):
    """Value of the interpolating polynomial of order ``coeffs.n`` at ``x``."""
    return coeffs.as_polynomial()(x)


@dataclass(frozen=True)
class FourierSeries:
    """True Fourier coefficients of a continuous function.

    ``coeff_fn(k)`` returns arrays ``(a_k, b_k)`` for an integer array k >= 0
    (b_0 is ignored); ``abs_tail_fn(K)`` bounds sum_{k>=K} (|a_k| + |b_k|).
    """

    coeff_fn: Callable = field(repr=False)
    abs_tail_fn: Callable = field(repr=False)

    @classmethod
    def from_polynomial(cls, p: TrigPolynomial) -> "FourierSeries":
        a = np.concatenate(([p.a0], p.a))
        b = np.concatenate(([0.0], p.b))
        deg = p.degree

        def coeff_fn(k):
            k = np.asarray(k)
            inside = k <= deg
            kk = np.where(inside, k, 0)
            return np.where(inside, a[kk], 0.0), np.where(inside, b[kk], 0.0)

        def abs_tail_fn(K):
            return float(np.sum(np.abs(a[K:]) + np.abs(b[K:]))) if K <= deg else 0.0

        return cls(coeff_fn, abs_tail_fn)


def aliased_coeffs(full: FourierSeries | TrigPolynomial, n: int, tol: float = 1e-14,
                   max_blocks: int = 1 << 20) -> DiscreteCoeffs:
    """Discrete coefficients obtained by folding the Fourier series onto 0..n.

    a_k^(n) = a_k + sum_m (a_{mN+k} + a_{mN-k}),
    b_k^(n) = b_k + sum_m (b_{mN+k} - b_{mN-k}),   N = 2n+1.
    """
    if n < 1:
        raise ValidationError("n must be >= 1")
    if isinstance(full, TrigPolynomial):
        full = FourierSeries.from_polynomial(full)
    N = 2 * n + 1
    M = 1
    while full.abs_tail_fn((M + 1) * N - n) >= tol:
        if M >= max_blocks:
            raise TruncationError(
                f"aliasing tail not below tol={tol!r} after {M} blocks",
                achieved=full.abs_tail_fn((M + 1) * N - n))
        M *= 2
    k = np.arange(n + 1)
    m = np.arange(1, M + 1)[:, None]
    a_k, b_k = full.coeff_fn(k)
    a_p, b_p = full.coeff_fn(m * N + k)
    a_m, b_m = full.coeff_fn(m * N - k)
    a = np.asarray(a_k, dtype=float) + np.sum(a_p + a_m, axis=0)
    b = np.asarray(b_k, dtype=float) + np.sum(b_p - b_m, axis=0)
    return DiscreteCoeffs(n, a, b[1:])


@dataclass(frozen=True)
class ClassMemberSpec:
    """f = a0/2 + (1/pi) * (phi convolved with the kernel of (psi, beta))."""

    a0: float
    phi: TrigPolynomial
    psi: PsiSequence
    beta: BetaSequence

    def __post_init__(self):
        if self.phi.a0 != 0.0:
            raise MembershipError("phi must have zero mean (a0 = 0)")


def synthesize_f(spec: ClassMemberSpec, truncation: int | None = None, *,
                 check_membership: bool = True) -> TrigPolynomial:
    """Coefficients of the class member generated by ``spec.phi``.

    The k-th harmonic c cos kt + d sin kt of phi becomes
    psi(k) (c cos(kx - th) + d sin(kx - th)), th = beta_k pi/2.
    """
    phi = spec.phi
    if truncation is None:
        truncation = phi.degree
    if phi.degree > truncation:
        raise ShapeError(f"phi has degree {phi.degree} > truncation {truncation}")
    if check_membership and phi.l2_norm() > 1.0 + MEMBERSHIP_TOL:
        raise MembershipError(f"||phi||_2 = {phi.l2_norm()!r} exceeds 1")
    if phi.degree == 0:
        return TrigPolynomial(spec.a0, [], [])
    k = np.arange(1, phi.degree + 1)
    p = np.asarray(spec.psi(k), dtype=float)
    th = np.asarray(spec.beta(k), dtype=float) * (math.pi / 2.0)
    c, s = np.cos(th), np.sin(th)
    a = p * (phi.a * c - phi.b * s)
    b = p * (phi.a * s + phi.b * c)
    return TrigPolynomial(spec.a0, a, b)
