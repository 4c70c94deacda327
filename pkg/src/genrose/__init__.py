"""Exact second and third moments of the generalized Rosenblatt distribution."""

from .errors import DomainError, QuadratureError
from .moments import (
    MomentReport,
    f1,
    f2,
    f3,
    mu2,
    mu3,
    normalization_A,
    report,
    standardized_m3,
)
from .parameters import (
    GammaPair,
    SigmaVector,
    alpha,
    enumerate_sigma,
    hurst,
    make_gamma_pair,
    pair_from_alpha,
)
from .special import beta, log_beta, log_gamma

__version__ = "0.1.0"
