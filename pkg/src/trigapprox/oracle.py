"""Independent verification of the sharp-error values through duality.

For f in the class, f(x) - U_n(f; x) = (1/pi) int phi(x - t) u(t) dt with
an explicit zero-mean kernel u depending on (psi, beta, Lambda, M, x).
The supremum over the unit ball of zero-mean L2 functions is ||u||_2 / pi,
attained by phi(x - t) = u(t) / ||u||_2.  This module builds u harmonic by
harmonic, synthesizes the extremal class member and measures its error
through the full sampling pipeline, so the comparison with the series
evaluators shares no code path with them beyond psi itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .exact_errors import ErrorResult, pointwise_error_general, reduced_phase
from .exceptions import DegenerateInputError, ValidationError
from .interpolation import (
    ClassMemberSpec,
    TrigPolynomial,
    fourier_lagrange_coeffs,
    nodes,
    synthesize_f,
)
from .kernels import BetaSequence, PsiSequence
from .methods import MultiplierSet, apply_method

__all__ = [
    "DualKernel",
    "VerificationReport",
    "build_dual_kernel",
    "extremal_phi",
    "achieved_error",
    "verify_attainment",
    "monte_carlo_sup",
]


@dataclass(frozen=True, eq=False)
class DualKernel:
    """Kernel u(t) truncated after block M.

    ``tail_bound`` bounds the squared L2 norm over [-pi, pi] of the dropped
    blocks.
    """

    n: int
    mults: MultiplierSet
    psi: PsiSequence
    x: float
    blocks: int
    poly: TrigPolynomial
    tail_bound: float

    def amplitudes(self) -> np.ndarray:
        return np.hypot(self.poly.a, self.poly.b)

    def parseval_value(self) -> float:
        """(1/sqrt(pi)) * (sum of squared amplitudes)**(1/2), i.e. ||u_M||_2 / pi."""
        return math.sqrt(math.fsum(self.amplitudes() ** 2) / math.pi)

    def value_gap_bound(self) -> float:
        """Bound on (sharp error) - parseval_value() due to the dropped blocks."""
        return math.sqrt(self.tail_bound) / math.pi


def build_dual_kernel(psi: PsiSequence, beta: BetaSequence, mults: MultiplierSet,
                      x: float, M: int) -> DualKernel:
    """Harmonics of u: for k <= n, psi(k)((1-lam_k) cos(kt - b_k) - mu_k sin(kt - b_k));
    for nu = mN + j in block m,
    psi(nu)((cos m theta - lam_|j|) cos(nu t - m theta - b_nu)
            - (sin m theta + sgn(j) mu_|j|) sin(nu t - m theta - b_nu)),
    with b_k = beta_k pi/2 and theta = (2n+1) x."""
    if M < 1:
        raise ValidationError("M must be >= 1")
    n = mults.n
    N = 2 * n + 1
    theta = reduced_phase(n, x)
    lam, mu = np.asarray(mults.lam), np.asarray(mults.mu)
    deg = M * N + n
    kk = np.arange(1, deg + 1)
    A = np.empty(deg)
    B = np.empty(deg)
    shift = np.zeros(deg)
    A[:n] = 1.0 - lam[1:]
    B[:n] = mu[1:]
    m = np.arange(1, M + 1)[:, None]
    j = np.arange(-n, n + 1)[None, :]
    mt = np.broadcast_to(m * theta, (M, N))
    A[n:] = (np.cos(mt) - lam[np.abs(j)]).reshape(-1)
    B[n:] = (np.sin(mt) + np.sign(j) * mu[np.abs(j)]).reshape(-1)
    shift[n:] = mt.reshape(-1)
    phase = shift + np.asarray(beta(kk), dtype=float) * (math.pi / 2.0)
    p = np.asarray(psi(kk), dtype=float)
    c, s = np.cos(phase), np.sin(phase)
    poly = TrigPolynomial(0.0, p * (A * c + B * s), p * (A * s - B * c))
    weight = (1.0 + mults.max_abs_lambda) ** 2 + (1.0 + mults.max_abs_mu) ** 2
    tail = math.pi * weight * psi.tail((M + 1) * N - n)
    return DualKernel(n, mults, psi, float(x), M, poly, tail)


def extremal_phi(kernel: DualKernel) -> TrigPolynomial:
    """phi* = u / ||u||_2 (zero mean, unit norm)."""
    norm = kernel.poly.l2_norm()
    if norm == 0.0:
        raise DegenerateInputError("dual kernel is identically zero; the error is 0")
    return TrigPolynomial(0.0, kernel.poly.a / norm, kernel.poly.b / norm)


def achieved_error(phi: TrigPolynomial, psi: PsiSequence, beta: BetaSequence,
                   mults: MultiplierSet, x: float, *, check_membership: bool = True) -> float:
    """|f(x) - U_n(f; x)| for the member generated by phi, via sampling at the nodes."""
    f = synthesize_f(ClassMemberSpec(0.0, phi, psi, beta), check_membership=check_membership)
    n = mults.n
    coeffs = fourier_lagrange_coeffs(f(nodes(n)), n)
    return abs(f(x) - apply_method(coeffs, mults, x))


@dataclass(frozen=True)
class VerificationReport:
    theoretical: float
    achieved: float
    mc_max: float | None
    delta: float
    passed: bool
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"theoretical": self.theoretical, "achieved": self.achieved,
                "mc_max": self.mc_max, "delta": self.delta, "pass": self.passed,
                **({"details": self.details} if self.details else {})}


def _choose_blocks(psi, beta, mults, x, target: float, max_degree: int) -> DualKernel:
    N = 2 * mults.n + 1
    M = 8
    while True:
        kern = build_dual_kernel(psi, beta, mults, x, M)
        if kern.value_gap_bound() <= target or (2 * M) * N > max_degree:
            return kern
        M *= 2


def verify_attainment(psi: PsiSequence, beta: BetaSequence, mults: MultiplierSet,
                      x: float, M: int | None = None, tol: float = 1e-10, *,
                      rel_gap: float = 1e-3, max_degree: int = 1 << 15,
                      theory: ErrorResult | None = None) -> VerificationReport:
    """Check that the extremal member reaches the sharp error within delta.

    delta = truncation bound of the series value + dropped-block gap of the
    kernel + ``tol``.  With ``M=None`` the block count grows until the gap
    is at most ``rel_gap`` times the sharp value (or ``max_degree`` is hit).
    """
    if not tol > 0.0:
        raise ValidationError("tol must be positive")
    if theory is None:
        theory = pointwise_error_general(psi, mults, x, tol=min(tol, 1e-10))
    E = theory.value
    if M is None:
        kern = _choose_blocks(psi, beta, mults, x, rel_gap * E, max_degree)
    else:
        kern = build_dual_kernel(psi, beta, mults, x, M)
    gap = kern.value_gap_bound()
    delta = theory.truncation_bound + gap + tol
    try:
        phi_star = extremal_phi(kern)
    except DegenerateInputError:
        achieved = 0.0
    else:
        achieved = achieved_error(phi_star.reflected(x), psi, beta, mults, x)
    passed = abs(achieved - E) <= delta
    return VerificationReport(E, achieved, None, delta, passed,
                              {"blocks": kern.blocks, "kernel_gap": gap,
                               "series_bound": theory.truncation_bound,
                               "parseval_value": kern.parseval_value()})


def random_unit_phi(rng: np.random.Generator, degree: int) -> TrigPolynomial:
    """Zero-mean trig polynomial, direction uniform on the L2 unit sphere."""
    a = rng.standard_normal(degree)
    b = rng.standard_normal(degree)
    p = TrigPolynomial(0.0, a, b)
    return p * (1.0 / p.l2_norm())


def monte_carlo_sup(psi: PsiSequence, beta: BetaSequence, mults: MultiplierSet, x: float,
                    samples: int, degree: int, seed: int, *,
                    phis: list[TrigPolynomial] | None = None) -> float:
    """Largest |f(x) - U_n(f; x)| over random phi on the unit sphere (a lower bound on the sup).

    Sample i uses its own generator spawned from ``seed``, so results do
    not depend on evaluation order.  ``phis`` are evaluated in addition.
    """
    if samples < 0 or (samples == 0 and not phis):
        raise ValidationError("samples must be >= 1")
    if degree < mults.n + 1:
        raise ValidationError("degree must be at least n + 1")
    best = 0.0
    for child in np.random.SeedSequence(seed).spawn(samples):
        phi = random_unit_phi(np.random.default_rng(child), degree)
        best = max(best, achieved_error(phi, psi, beta, mults, x))
    for phi in phis or ():
        best = max(best, achieved_error(phi, psi, beta, mults, x))
    return best
