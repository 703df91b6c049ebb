"""Trigonometric interpolation, Fourier-Lagrange linear methods and their sharp
worst-case errors on convolution classes C^psi_{beta,2}."""

from ._backend import available as available_backends, current as current_backend, use_backend
from .exact_errors import (
    AlphaSequenceReport,
    ErrorResult,
    alpha_convexity_check,
    pointwise_error_general,
    pointwise_error_interp,
    poisson_pointwise,
    poisson_uniform,
    sobolev_pointwise,
    sobolev_uniform,
    uniform_error_convex,
)
from .exceptions import (
    DegenerateInputError,
    MembershipError,
    MultiplierConditionError,
    PreconditionError,
    ShapeError,
    TrigApproxError,
    TruncationError,
    ValidationError,
)
from .gamma import gamma_fn
from .interpolation import (
    ClassMemberSpec,
    DiscreteCoeffs,
    FourierSeries,
    TrigPolynomial,
    aliased_coeffs,
    eval_interpolant,
    fourier_lagrange_coeffs,
    nodes,
    synthesize_f,
)
from .kernels import (
    BetaSequence,
    KernelHarmonic,
    PsiSequence,
    kernel_harmonic,
    make_psi,
    parse_psi,
    tail_bound,
)
from .methods import MultiplierSet, apply_method, preset_multipliers, validate_multipliers
from .oracle import (
    DualKernel,
    VerificationReport,
    build_dual_kernel,
    extremal_phi,
    monte_carlo_sup,
    verify_attainment,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "AlphaSequenceReport",
    "BetaSequence",
    "ClassMemberSpec",
    "DegenerateInputError",
    "DiscreteCoeffs",
    "DualKernel",
    "ErrorResult",
    "FourierSeries",
    "KernelHarmonic",
    "MembershipError",
    "MultiplierConditionError",
    "MultiplierSet",
    "PreconditionError",
    "PsiSequence",
    "ShapeError",
    "TrigApproxError",
    "TrigPolynomial",
    "TruncationError",
    "ValidationError",
    "VerificationReport",
    "aliased_coeffs",
    "alpha_convexity_check",
    "apply_method",
    "available_backends",
    "build_dual_kernel",
    "current_backend",
    "eval_interpolant",
    "extremal_phi",
    "fourier_lagrange_coeffs",
    "gamma_fn",
    "kernel_harmonic",
    "make_psi",
    "monte_carlo_sup",
    "nodes",
    "parse_psi",
    "pointwise_error_general",
    "pointwise_error_interp",
    "poisson_pointwise",
    "poisson_uniform",
    "preset_multipliers",
    "sobolev_pointwise",
    "sobolev_uniform",
    "synthesize_f",
    "tail_bound",
    "uniform_error_convex",
    "use_backend",
    "validate_multipliers",
    "verify_attainment",
]
