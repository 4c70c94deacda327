"""Closed-form moments of Z_{gamma1,gamma2}(1).

With a = gamma1 + gamma2 and the kernel amplitude A,

    mu2 = A^2 / ((a+2)(2a+3)) * S2
    mu3 = 2 A^3 / ((a+2)(3a+5)) * S3

where S2 is a sum of two beta products and S3 a sum over sigma in {1,2}^3 of
four beta factors each.  Every beta product is built as a sum of log-betas
and exponentiated once; the terms are then added with ``math.fsum``.

The standardized third moment M3 = F1 * F2 * F3 uses the positive root
for the amplitude that makes mu2 = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .parameters import GammaPair, SigmaVector, check_amplitude, enumerate_sigma
from .special import log_beta

__all__ = [
    "MomentReport",
    "SIGMA3_INDEX_TABLE",
    "variance_bracket",
    "sigma3_term",
    "mu2",
    "mu3",
    "normalization_A",
    "f1",
    "f2",
    "f3",
    "standardized_m3",
    "report",
]


def _log_bracket_terms(p: GammaPair):
    g1, g2 = p.gamma1, p.gamma2
    a = g1 + g2
    return (
        log_beta(g1 + 1.0, -a - 1.0) + log_beta(g2 + 1.0, -a - 1.0),
        log_beta(g1 + 1.0, -2.0 * g1 - 1.0) + log_beta(g2 + 1.0, -2.0 * g2 - 1.0),
    )


def variance_bracket(p: GammaPair) -> float:
    """B(g1+1,-a-1) B(g2+1,-a-1) + B(g1+1,-2g1-1) B(g2+1,-2g2-1)."""
    return math.fsum(math.exp(t) for t in _log_bracket_terms(p))


# Which sigma slot feeds each gamma in a summand of S3.  Each beta factor
# B(x, y) is encoded by (x_terms, x_const, y_terms, y_const), where a term
# (slot, primed, sign) contributes sign * gamma_{sigma_slot} or, when
# primed, sign * gamma_{sigma'_slot}.  Slots are 0-based:
#   B(g_{s1} + 1,        -g_{s1} - g_{s3'} - 1)
#   B(g_{s1'} + 1,       -g_{s1'} - g_{s2} - 1)
#   B(g_{s2'} + 1,       -g_{s2'} - g_{s3} - 1)
#   B(g_{s1'} + g_{s2} + 2, g_{s2'} + g_{s3} + 2)
SIGMA3_INDEX_TABLE = (
    (((0, False, 1),), 1.0, ((0, False, -1), (2, True, -1)), -1.0),
    (((0, True, 1),), 1.0, ((0, True, -1), (1, False, -1)), -1.0),
    (((1, True, 1),), 1.0, ((1, True, -1), (2, False, -1)), -1.0),
    (((0, True, 1), (1, False, 1)), 2.0, ((1, True, 1), (2, False, 1)), 2.0),
)


def _table_arg(p, sigma, terms, const):
    comp = sigma.complement()
    total = const
    for slot, primed, sign in terms:
        total += sign * p.gamma(comp[slot] if primed else sigma[slot])
    return total


def sigma3_beta_arguments(p: GammaPair, sigma: SigmaVector):
    """The four (x, y) beta argument pairs of the summand indexed by sigma."""
    if len(sigma) != 3:
        raise ValueError("the third-moment sum runs over sigma in {1,2}^3")
    return [
        (_table_arg(p, sigma, xt, xc), _table_arg(p, sigma, yt, yc))
        for xt, xc, yt, yc in SIGMA3_INDEX_TABLE
    ]


def sigma3_term(p: GammaPair, sigma: SigmaVector) -> float:
    """One summand of S3 (a product of four betas)."""
    return math.exp(sum(log_beta(x, y) for x, y in sigma3_beta_arguments(p, sigma)))


def f2(p: GammaPair) -> float:
    """The sigma-sum S3, accumulated in lexicographic sigma order."""
    return math.fsum(sigma3_term(p, s) for s in enumerate_sigma(3))


def mu2(p: GammaPair, A) -> float:
    """Second moment (= variance) of Z(1) for amplitude A."""
    A = check_amplitude(A)
    a = p.alpha
    return A * A / ((a + 2.0) * (2.0 * a + 3.0)) * variance_bracket(p)


def mu3(p: GammaPair, A) -> float:
    """Third moment of Z(1) for amplitude A."""
    A = check_amplitude(A)
    a = p.alpha
    return 2.0 * A**3 / ((a + 2.0) * (3.0 * a + 5.0)) * f2(p)


def normalization_A(p: GammaPair) -> float:
    """Positive amplitude giving unit variance."""
    a = p.alpha
    return math.sqrt((a + 2.0) * (2.0 * a + 3.0) / variance_bracket(p))


def f1(p: GammaPair) -> float:
    a = p.alpha
    return 2.0 * math.sqrt(a + 2.0) * (2.0 * a + 3.0) ** 1.5 / (3.0 * a + 5.0)


def f3(p: GammaPair) -> float:
    # bracket^(-3/2) straight from the log terms, avoiding overflow near the edge
    lt = _log_bracket_terms(p)
    top = max(lt)
    log_bracket = top + math.log(math.fsum(math.exp(t - top) for t in lt))
    return math.exp(-1.5 * log_bracket)


def standardized_m3(p: GammaPair) -> float:
    """Third moment of Z(1) scaled to unit variance: F1 * F2 * F3."""
    return f1(p) * f2(p) * f3(p)


@dataclass(frozen=True)
class MomentReport:
    pair: GammaPair
    amplitude: float
    mu1: float
    mu2: float
    mu3: float
    m3_standardized: float
    f1: float
    f2: float
    f3: float

    def as_dict(self) -> dict:
        return {
            "gamma1": self.pair.gamma1,
            "gamma2": self.pair.gamma2,
            "alpha": self.pair.alpha,
            "hurst": self.pair.hurst,
            "amplitude": self.amplitude,
            "mu1": self.mu1,
            "mu2": self.mu2,
            "mu3": self.mu3,
            "M3": self.m3_standardized,
            "F1": self.f1,
            "F2": self.f2,
            "F3": self.f3,
        }


def report(p: GammaPair, A=None) -> MomentReport:
    """Collect all moment quantities at one parameter point.

    ``A`` defaults to :func:`normalization_A`, in which case ``mu2`` is 1 and
    ``mu3`` equals the standardized third moment.
    """
    amp = normalization_A(p) if A is None else check_amplitude(A)
    a = p.alpha
    v1, v2, v3 = f1(p), f2(p), f3(p)
    return MomentReport(
        pair=p,
        amplitude=amp,
        mu1=0.0,
        mu2=mu2(p, amp),
        mu3=2.0 * amp**3 / ((a + 2.0) * (3.0 * a + 5.0)) * v2,
        m3_standardized=v1 * v2 * v3,
        f1=v1,
        f2=v2,
        f3=v3,
    )
