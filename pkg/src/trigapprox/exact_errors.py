"""Sharp pointwise and uniform errors of Fourier-Lagrange methods on C^psi_{beta,2}.

Notation used throughout: N = 2n + 1, theta = N x reduced to (-pi, pi],
block m = indices k = mN - n .. mN + n, g_j(m) = psi(mN + j)**2.

Series evaluators sum whole blocks m = 1..M directly (compiled core when
available) and close the remainder in one of two ways:

* built-in families (geometric, power): the non-oscillating part of the
  remainder is summed exactly through closed-form progression sums, and
  the oscillating part sum_{m>M} C_m z**m, z = exp(i theta), is expanded by
  repeated summation by parts.  Since every g_j is completely monotone in
  m, the p-th difference is non-negative and decreasing, and Abel's bound
  gives |remainder| <= 2 sum_j |c_j| Dp(g_j) / |1 - z|**(p+1).
* custom families: the remainder is bounded crudely by the largest block
  weight times the certified tail majorant of psi**2.

``ErrorResult.truncation_bound`` bounds |value - exact| coming from the
truncation (and, for the integral forms, the quadrature error estimate).
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .exceptions import PreconditionError, TruncationError, ValidationError
from .gamma import gamma_fn
from .kernels import PsiSequence
from .methods import MultiplierSet
from .quadrature import exp_sinh

__all__ = [
    "ErrorResult",
    "AlphaSequenceReport",
    "pointwise_error_general",
    "pointwise_error_interp",
    "alpha_convexity_check",
    "uniform_error_convex",
    "poisson_pointwise",
    "poisson_uniform",
    "sobolev_uniform",
    "sobolev_pointwise",
    "reduced_phase",
]

_SQRT_PI = math.sqrt(math.pi)
_EPS = sys.float_info.epsilon
_MAX_ORDER = 6
_START_BLOCKS = 8
DEFAULT_MAX_BLOCKS = 1 << 24


@dataclass(frozen=True)
class ErrorResult:
    value: float
    truncation_bound: float
    terms_used: int
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"value": self.value, "truncation_bound": self.truncation_bound,
                "terms_used": self.terms_used, "params": dict(self.params)}


@dataclass(frozen=True)
class AlphaSequenceReport:
    """Finite-prefix convexity status of alpha_m = m * (block m sum of psi**2).

    A passing report is not a certificate for the whole sequence.
    """

    checked_up_to: int
    is_convex_on_prefix: bool
    first_violation: int | None
    nonincreasing_at_end: bool
    alphas: tuple = field(default=(), repr=False)


def reduced_phase(n: int, x: float) -> float:
    """theta = (2n+1) x reduced to [-pi, pi]; rounding-level residues snap to 0."""
    t = (2 * n + 1) * float(x)
    theta = math.remainder(t, 2.0 * math.pi)
    if abs(theta) <= 8.0 * _EPS * max(1.0, abs(t)):
        return 0.0
    return theta


def block_weights(mults: MultiplierSet):
    """(lam_|j|, sgn(j) mu_|j|) for j = -n..n."""
    j = np.arange(-mults.n, mults.n + 1)
    return np.asarray(mults.lam)[np.abs(j)], np.sign(j) * np.asarray(mults.mu)[np.abs(j)]


def _check_n(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")


def _check_tol(tol: float) -> None:
    if not tol > 0.0:
        raise ValidationError("tol must be positive")


def _sqrt_bound(s_hat: float, t: float) -> float:
    """Bound on |sqrt(s) - sqrt(s_hat)| given |s - s_hat| <= t."""
    if t <= 0.0:
        return 0.0
    root_t = math.sqrt(t)
    return root_t if s_hat <= 0.0 else min(root_t, t / math.sqrt(s_hat))


def _flat_tail(psi: PsiSequence, n: int, c: np.ndarray, M: int) -> float:
    """Exact sum_{m>M} sum_j c_j g_j(m)."""
    N = 2 * n + 1
    j = np.arange(-n, n + 1)
    G = psi.progression_sum((M + 1) * N + j, N)
    return math.fsum(c * G)


def _osc_tail(psi: PsiSequence, n: int, c: np.ndarray, M: int, theta: float):
    """Estimate and bound of sum_{m>M} C_m exp(i m theta), C_m = sum_j c_j g_j(m)."""
    N = 2 * n + 1
    j = np.arange(-n, n + 1)
    abs_c = np.abs(c)
    if not np.any(abs_c):
        return 0j, 0.0
    G = psi.progression_sum((M + 1) * N + j, N)
    if theta == 0.0:
        est = math.fsum(c * G)
        return complex(est), 4.0 * _EPS * math.fsum(abs_c * G)
    one_minus_z = 1.0 - cmath.exp(1j * theta)
    d = abs(one_minus_z)
    # crude option: no estimate, bound by the absolute tail
    best_est, best_bound = 0j, math.fsum(abs_c * G)
    ms = np.arange(M + 1, M + 1 + _MAX_ORDER)
    g = psi.psi2(ms[:, None] * N + j[None, :])
    C = g @ c
    # each C[l] carries a few ulps of sum_j |c_j| g_j; the differences below
    # amplify that by 2**p and the division by |1 - z|**(p+1) amplifies it again
    c_err = (N + 4) * _EPS * float(np.max(g @ abs_c))
    est = 0j
    est_err = 0.0
    zpow = cmath.exp(1j * math.remainder((M + 1) * theta, 2.0 * math.pi))
    z = cmath.exp(1j * theta)
    for p in range(_MAX_ORDER + 1):
        dp_bar = psi.derivative_bound((M + 1) * N + j, N, p)
        bound = 2.0 * math.fsum(abs_c * dp_bar) / d ** (p + 1) + est_err
        if bound < best_bound:
            best_est, best_bound = est, bound
        if p == _MAX_ORDER:
            break
        # p-th forward difference (-Delta)^p C at m = M+1
        Dp = math.fsum((-1) ** l * math.comb(p, l) * C[l] for l in range(p + 1))
        term = (-1) ** p * Dp * zpow / one_minus_z ** (p + 1)
        est += term
        est_err += 2 ** p * c_err / d ** (p + 1) + 8.0 * (p + 2) * _EPS * abs(term)
        zpow *= z
    rounding = 8.0 * _EPS * (abs(best_est) + math.fsum(abs_c * G))
    return best_est, best_bound + rounding


def _block_schedule(blocks: int | None, max_blocks: int):
    if blocks is not None:
        if blocks < 1:
            raise ValidationError("blocks must be >= 1")
        yield blocks
        return
    M = _START_BLOCKS
    while True:
        yield min(M, max_blocks)
        if M >= max_blocks:
            return
        M *= 2


def pointwise_error_general(psi: PsiSequence, mults: MultiplierSet, x: float,
                            tol: float = 1e-10, *, blocks: int | None = None,
                            max_blocks: int = DEFAULT_MAX_BLOCKS) -> ErrorResult:
    """Sharp pointwise error sup |f(x) - U_n(f; x)| over the class, for any multiplier row.

    In block m the harmonic mN + j contributes
    ((cos m theta - lam_|j|)^2 + (sin m theta + sgn(j) mu_|j|)^2) psi(mN + j)^2:
    sine coefficients alias onto index |j| with the sign of j, which flips
    the rotation term on the lower half of the block.  The phases beta_k do
    not enter the result.  ``blocks`` fixes the number
    of directly summed blocks instead of refining until the bound is below
    ``tol``.
    """
    _check_tol(tol)
    n = mults.n
    _check_n(n)
    N = 2 * n + 1
    theta = reduced_phase(n, x)
    lam, mu = np.asarray(mults.lam), np.asarray(mults.mu)
    k = np.arange(1, n + 1)
    head = math.fsum(((1.0 - lam[1:]) ** 2 + mu[1:] ** 2) * psi.psi2(k))
    lam_j, mu_j = block_weights(mults)
    flat_w = 1.0 + lam_j ** 2 + mu_j ** 2
    crude_w = (1.0 + mults.max_abs_lambda) ** 2 + (1.0 + mults.max_abs_mu) ** 2

    direct, done = 0.0, 0
    for M in _block_schedule(blocks, max_blocks):
        direct += _backend.general_blocks(psi, n, lam_j, mu_j, theta, done + 1, M)
        done = M
        if psi.exact_tails and theta == 0.0:
            # block weights (1 - lam_j)^2 + mu_j^2 no longer depend on m
            tail = _flat_tail(psi, n, (1.0 - lam_j) ** 2 + mu_j ** 2, M)
            t_bound = 8.0 * _EPS * tail
        elif psi.exact_tails:
            Tl, bl = _osc_tail(psi, n, lam_j, M, theta)
            Tm, bm = _osc_tail(psi, n, mu_j, M, theta)
            flat = _flat_tail(psi, n, flat_w, M)
            tail = flat - 2.0 * Tl.real + 2.0 * Tm.imag
            t_bound = 2.0 * (bl + bm) + 8.0 * _EPS * abs(flat)
        else:
            tail = 0.0
            t_bound = crude_w * psi.tail((M + 1) * N - n)
        s_hat = max(head + direct + tail, 0.0)
        t_bound += 8.0 * _EPS * (head + direct)
        value = math.sqrt(s_hat / math.pi)
        bound = _sqrt_bound(s_hat, t_bound) / _SQRT_PI
        if bound <= tol or blocks is not None:
            return ErrorResult(value, bound, M * N + n,
                               {"n": n, "x": float(x), "method": mults.name,
                                "psi": _psi_label(psi), "formula": "general", "blocks": M})
    raise TruncationError(
        f"series not certified to tol={tol!r} within {max_blocks} blocks", achieved=bound)


def pointwise_error_interp(psi: PsiSequence, n: int, x: float, tol: float = 1e-10, *,
                           blocks: int | None = None,
                           max_blocks: int = DEFAULT_MAX_BLOCKS) -> ErrorResult:
    """Sharp pointwise error of the interpolation polynomial:

    (2/sqrt(pi)) * (sum_m sin^2(m theta / 2) * block_m)**(1/2).
    """
    _check_tol(tol)
    _check_n(n)
    N = 2 * n + 1
    theta = reduced_phase(n, x)
    ones = np.ones(N)
    direct, done = 0.0, 0
    for M in _block_schedule(blocks, max_blocks):
        direct += _backend.interp_blocks(psi, n, theta, done + 1, M)
        done = M
        if theta == 0.0:
            # every remaining weight sin^2(m theta / 2) vanishes
            tail, t_bound = 0.0, 0.0
        elif psi.exact_tails:
            T, b = _osc_tail(psi, n, ones, M, theta)
            flat = _flat_tail(psi, n, ones, M)
            tail = 0.5 * (flat - T.real)
            t_bound = 0.5 * b + 8.0 * _EPS * flat
        else:
            tail = 0.0
            t_bound = psi.tail((M + 1) * N - n)
        s_hat = max(direct + tail, 0.0)
        t_bound += 8.0 * _EPS * direct
        value = 2.0 * math.sqrt(s_hat) / _SQRT_PI
        bound = 2.0 * _sqrt_bound(s_hat, t_bound) / _SQRT_PI
        if bound <= tol or blocks is not None:
            return ErrorResult(value, bound, M * N + n,
                               {"n": n, "x": float(x), "method": "interp",
                                "psi": _psi_label(psi), "formula": "interp-series", "blocks": M})
    raise TruncationError(
        f"series not certified to tol={tol!r} within {max_blocks} blocks", achieved=bound)


def _alpha(psi: PsiSequence, n: int, M: int) -> np.ndarray:
    N = 2 * n + 1
    m = np.arange(1, M + 1)
    j = np.arange(-n, n + 1)
    blocks = psi.psi2(m[:, None] * N + j[None, :]).sum(axis=1)
    return m * blocks


def alpha_convexity_check(psi: PsiSequence, n: int, M: int) -> AlphaSequenceReport:
    """Check alpha_{m+1} - 2 alpha_m + alpha_{m-1} >= -1e-15 max(1, alpha_m) for 1 < m < M."""
    _check_n(n)
    if M < 3:
        raise ValidationError("M must be >= 3")
    alpha = _alpha(psi, n, M)
    second = alpha[2:] - 2.0 * alpha[1:-1] + alpha[:-2]
    slack = -1e-15 * np.maximum(1.0, alpha[1:-1])
    bad = np.nonzero(second < slack)[0]
    first = int(bad[0]) + 2 if bad.size else None
    return AlphaSequenceReport(M, first is None, first, bool(alpha[-1] <= alpha[-2]),
                               tuple(float(a) for a in alpha))


def uniform_error_convex(psi: PsiSequence, n: int, tol: float = 1e-10, *,
                         prefix: int = 50, blocks: int | None = None,
                         max_blocks: int = DEFAULT_MAX_BLOCKS) -> ErrorResult:
    """Uniform error of interpolation when alpha_m is convex:

    (2/sqrt(pi)) * (sum over odd blocks of psi**2)**(1/2).

    Convexity is checked on the first ``prefix`` terms only, together with
    alpha being non-increasing at the end of the prefix.
    """
    _check_tol(tol)
    _check_n(n)
    if prefix < 50:
        raise ValidationError("the convexity prefix must have at least 50 terms")
    report = alpha_convexity_check(psi, n, prefix)
    if not report.is_convex_on_prefix:
        raise PreconditionError(
            f"alpha_m is not convex: second difference negative at m={report.first_violation}",
            index=report.first_violation)
    if not report.nonincreasing_at_end:
        raise PreconditionError(
            f"alpha_m is increasing at the end of the {prefix}-term prefix", index=prefix)
    N = 2 * n + 1
    j = np.arange(-n, n + 1)
    direct, done = 0.0, 0
    for L in _block_schedule(blocks, max_blocks):
        # odd blocks 1, 3, ..., 2L-1
        direct += _backend.block_sum(psi, n, 2 * done + 1, 2 * L - 1, 2)
        done = L
        if psi.exact_tails:
            tail = math.fsum(psi.progression_sum((2 * L + 1) * N + j, 2 * N))
            t_bound = 8.0 * _EPS * (tail + direct)
        else:
            tail = 0.0
            t_bound = psi.tail((2 * L + 1) * N - n)
        s_hat = direct + tail
        value = 2.0 * math.sqrt(s_hat) / _SQRT_PI
        bound = 2.0 * _sqrt_bound(s_hat, t_bound) / _SQRT_PI
        if bound <= tol or blocks is not None:
            return ErrorResult(value, bound, (2 * L - 1) * N + n,
                               {"n": n, "method": "interp", "psi": _psi_label(psi),
                                "formula": "uniform-convex", "blocks": L,
                                "convexity_prefix": prefix})
    raise TruncationError(
        f"series not certified to tol={tol!r} within {max_blocks} blocks", achieved=bound)


def _check_q(q: float) -> float:
    q = float(q)
    if not 0.0 < q < 1.0:
        raise ValidationError("q must lie in (0,1)")
    return q


def poisson_pointwise(q: float, n: int, x: float) -> float:
    """Closed form of the pointwise interpolation error for psi(k) = q**k."""
    q = _check_q(q)
    _check_n(n)
    N = 2 * n + 1
    sh = math.sin(0.5 * reduced_phase(n, x))
    rho = q ** (2 * N)
    denom = (1.0 - rho) ** 2 + 4.0 * rho * sh * sh
    return abs(sh) * 2.0 * q ** (n + 1) / math.sqrt(math.pi * (1.0 - q * q)) \
        * math.sqrt((1.0 + rho) / denom)


def poisson_uniform(q: float, n: int) -> float:
    """Closed form 2 q^(n+1) / sqrt(pi (1 - q^2)(1 + q^(2(2n+1))))."""
    q = _check_q(q)
    _check_n(n)
    return 2.0 * q ** (n + 1) / math.sqrt(math.pi * (1.0 - q * q) * (1.0 + q ** (2 * (2 * n + 1))))


def _check_r(r: float) -> float:
    r = float(r)
    if not r > 0.5:
        raise ValidationError("r must exceed 1/2")
    return r


def _weyl_prefactor(r: float, n: int) -> float:
    return 2.0 / (math.sqrt(math.pi * gamma_fn(2.0 * r)) * (2 * n + 1) ** r)


def _weyl_common(r: float, n: int):
    """u**(2r-2) * exp(-u (n+1)/N) * u / (1 - exp(-u/N)), with rho = exp(-u)."""
    N = 2 * n + 1
    c = (n + 1) / N
    a = 2.0 * r - 2.0

    def base(u):
        return np.exp(-c * u) * u ** a * (u / -np.expm1(-u / N))

    return base


def sobolev_uniform(r: float, n: int, tol: float = 1e-10) -> ErrorResult:
    """Uniform interpolation error on W^r_{beta,2} through the rho-integral.

    With rho = exp(-u) the integral becomes
    int_0^inf exp(-u (n+1)/N) u^(2r-1) / ((1 - exp(-u/N)) (1 + exp(-u))) du,
    whose integrand behaves like (N/2) u^(2r-2) at u = 0; that algebraic
    endpoint singularity (r < 1) is absorbed by the exp-sinh rule.
    """
    r = _check_r(r)
    _check_n(n)
    _check_tol(tol)
    base = _weyl_common(r, n)
    quad = exp_sinh(lambda u: base(u) / (1.0 + np.exp(-u)), rtol=tol)
    pref = _weyl_prefactor(r, n)
    value = pref * math.sqrt(quad.value)
    bound = value * (quad.error / quad.value) / 2.0
    return ErrorResult(value, bound, quad.evaluations,
                       {"n": n, "method": "interp", "psi": f"power:r={r!r}",
                        "formula": "weyl-integral-uniform"})


def sobolev_pointwise(r: float, n: int, x: float, tol: float = 1e-10) -> ErrorResult:
    """Pointwise interpolation error on W^r_{beta,2} through the rho-integral.

    The factor (1 + rho)/(1 - 2 rho cos theta + rho^2) is evaluated as
    (1 + rho)/((1 - rho)^2 + 4 rho sin^2(theta/2)) to avoid cancellation.
    At theta = 0 the sine prefactor vanishes and the value is 0.
    """
    r = _check_r(r)
    _check_n(n)
    _check_tol(tol)
    theta = reduced_phase(n, x)
    sh = math.sin(0.5 * theta)
    params = {"n": n, "x": float(x), "method": "interp", "psi": f"power:r={r!r}",
              "formula": "weyl-integral-pointwise"}
    if sh == 0.0:
        return ErrorResult(0.0, 0.0, 0, params)
    base = _weyl_common(r, n)
    s2 = 4.0 * sh * sh

    def integrand(u):
        e = np.exp(-u)
        return base(u) * (1.0 + e) / (np.expm1(-u) ** 2 + s2 * e)

    quad = exp_sinh(integrand, scale=min(1.0, 2.0 * abs(sh)), rtol=tol, max_level=14)
    value = abs(sh) * _weyl_prefactor(r, n) * math.sqrt(quad.value)
    bound = value * (quad.error / quad.value) / 2.0
    return ErrorResult(value, bound, quad.evaluations, params)


def _psi_label(psi: PsiSequence) -> str:
    if psi.family == "geometric":
        return f"geometric:q={psi.param!r}"
    if psi.family == "power":
        return f"power:r={psi.param!r}"
    return "custom"

