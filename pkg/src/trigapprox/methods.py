"""Linear polynomial methods built on Fourier-Lagrange coefficients.

A method of order n is one row (lambda_k, mu_k), k = 0..n, of the
multiplier matrices.  Entries beyond n are zero by construction.  The
limits lambda_k -> 1, mu_k -> 0 as n grows are a property of the whole
matrix and cannot be checked on a single row, so they are not enforced.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .exceptions import MultiplierConditionError, ShapeError, ValidationError
from .interpolation import DiscreteCoeffs, TrigPolynomial

__all__ = [
    "MultiplierSet",
    "validate_multipliers",
    "preset_multipliers",
    "apply_method",
    "method_polynomial",
    "load_multipliers",
    "parse_method",
    "PRESETS",
]

PRESETS = ("interp", "zero")


@dataclass(frozen=True, eq=False)
class MultiplierSet:
    n: int
    lam: np.ndarray
    mu: np.ndarray
    name: str = "custom"

    @property
    def max_abs_lambda(self) -> float:
        return float(np.max(np.abs(self.lam)))

    @property
    def max_abs_mu(self) -> float:
        return float(np.max(np.abs(self.mu)))

    @property
    def is_interp(self) -> bool:
        return bool(np.all(self.lam == 1.0) and np.all(self.mu == 0.0))


def validate_multipliers(lam, mu, n: int, name: str = "custom") -> MultiplierSet:
    """Check one multiplier row and wrap it.

    ``lam`` and ``mu`` hold entries k = 0..n.  lambda_0 = 1 and mu_0 = 0
    are compared exactly.
    """
    if n < 1:
        raise ValidationError("n must be >= 1")
    lam = np.array(lam, dtype=float).reshape(-1)
    mu = np.array(mu, dtype=float).reshape(-1)
    if lam.size != n + 1 or mu.size != n + 1:
        raise ShapeError(f"multiplier rows need {n + 1} entries, got {lam.size} and {mu.size}")
    if not (np.all(np.isfinite(lam)) and np.all(np.isfinite(mu))):
        raise ValidationError("multipliers must be finite")
    if lam[0] != 1.0:
        raise MultiplierConditionError(f"λ_0 must equal 1 (got {lam[0]!r})")
    if mu[0] != 0.0:
        raise MultiplierConditionError(f"μ_0 must equal 0 (got {mu[0]!r})")
    lam.setflags(write=False)
    mu.setflags(write=False)
    return MultiplierSet(n, lam, mu, name)


def preset_multipliers(name: str, n: int) -> MultiplierSet:
    """``interp`` reproduces the interpolation polynomial; ``zero`` keeps only a_0/2."""
    if name == "interp":
        return validate_multipliers(np.ones(n + 1), np.zeros(n + 1), n, "interp")
    if name == "zero":
        lam = np.zeros(n + 1)
        lam[0] = 1.0
        return validate_multipliers(lam, np.zeros(n + 1), n, "zero")
    raise ValidationError(f"unknown preset {name!r}; expected one of {', '.join(PRESETS)}")


def method_polynomial(coeffs: DiscreteCoeffs, mults: MultiplierSet) -> TrigPolynomial:
    """The polynomial U_n(f) in coefficient form."""
    if coeffs.n != mults.n:
        raise ShapeError(f"coefficient order {coeffs.n} != multiplier order {mults.n}")
    lam, mu = mults.lam[1:], mults.mu[1:]
    a, b = coeffs.a[1:], coeffs.b
    return TrigPolynomial(coeffs.a[0], lam * a - mu * b, lam * b + mu * a)


def apply_method(coeffs: DiscreteCoeffs, mults: MultiplierSet, x):
    """Evaluate U_n(f; x) = a_0/2 + sum lam_k(a_k cos kx + b_k sin kx) + mu_k(-b_k cos kx + a_k sin kx)."""
    if coeffs.n != mults.n:
        raise ShapeError(f"coefficient order {coeffs.n} != multiplier order {mults.n}")
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    k = np.arange(1, coeffs.n + 1)
    kx = np.multiply.outer(xs, k)
    c, s = np.cos(kx), np.sin(kx)
    a, b = coeffs.a[1:], coeffs.b
    lam, mu = mults.lam[1:], mults.mu[1:]
    vals = 0.5 * coeffs.a[0] + (lam * (a * c + b * s) + mu * (-b * c + a * s)).sum(axis=-1)
    return float(vals[0]) if np.ndim(x) == 0 else vals


def load_multipliers(path: str | Path, n: int) -> MultiplierSet:
    """Read ``{"lambda": [...], "mu": [...]}`` from a JSON file."""
    try:
        data = json.loads(Path(path).read_text())
        lam, mu = data["lambda"], data["mu"]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ValidationError(f"cannot read multipliers from {str(path)!r}: {exc}") from None
    return validate_multipliers(lam, mu, n, name=f"custom:{path}")


def parse_method(text: str, n: int) -> MultiplierSet:
    """``interp``, ``zero`` or ``custom:<path>``."""
    if text.startswith("custom:"):
        return load_multipliers(text[len("custom:"):], n)
    return preset_multipliers(text, n)
