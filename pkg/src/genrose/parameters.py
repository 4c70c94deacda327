"""Parameter domain of the generalized Rosenblatt distribution.

The exponents must satisfy gamma1, gamma2 in (-1, -1/2) and
gamma1 + gamma2 > -3/2.  All checks are strict: points such as
gamma1 = -0.505 are fine, gamma1 = -0.5 is rejected, since the moment
formulas diverge on the boundary.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "GammaPair",
    "SigmaVector",
    "make_gamma_pair",
    "alpha",
    "hurst",
    "pair_from_alpha",
    "enumerate_sigma",
    "check_amplitude",
]


def _check_exponent(value, name):
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    if not (-1.0 < value < -0.5):
        raise DomainError(f"{name} must lie in the open interval (-1, -1/2), got {value!r}")


@dataclass(frozen=True)
class GammaPair:
    """Validated exponent pair (gamma1, gamma2)."""

    gamma1: float
    gamma2: float

    def __post_init__(self):
        g1 = float(self.gamma1)
        g2 = float(self.gamma2)
        object.__setattr__(self, "gamma1", g1)
        object.__setattr__(self, "gamma2", g2)
        _check_exponent(g1, "gamma1")
        _check_exponent(g2, "gamma2")
        if not g1 + g2 > -1.5:
            raise DomainError(f"gamma1 + gamma2 must exceed -3/2, got {g1 + g2!r}")

    @property
    def alpha(self) -> float:
        return self.gamma1 + self.gamma2

    @property
    def hurst(self) -> float:
        return self.gamma1 + self.gamma2 + 2.0

    def swapped(self) -> "GammaPair":
        return GammaPair(self.gamma2, self.gamma1)

    def gamma(self, index: int) -> float:
        """Exponent selected by a sigma entry (1 or 2)."""
        if index == 1:
            return self.gamma1
        if index == 2:
            return self.gamma2
        raise DomainError(f"sigma entries are 1 or 2, got {index!r}")


def make_gamma_pair(g1, g2) -> GammaPair:
    try:
        g1, g2 = float(g1), float(g2)
    except (TypeError, ValueError):
        raise DomainError(f"exponents must be real numbers, got {g1!r}, {g2!r}") from None
    return GammaPair(g1, g2)


def alpha(p: GammaPair) -> float:
    """Homogeneity degree gamma1 + gamma2, in (-3/2, -1)."""
    return p.alpha


def hurst(p: GammaPair) -> float:
    """Hurst index H = gamma1 + gamma2 + 2, in (1/2, 1)."""
    return p.hurst


def pair_from_alpha(alpha: float, gamma1: float) -> GammaPair:
    """The pair (gamma1, alpha - gamma1) used when sweeping at fixed H."""
    return make_gamma_pair(gamma1, alpha - gamma1)


@dataclass(frozen=True)
class SigmaVector:
    """An element of {1, 2}^m choosing gamma1 or gamma2 for each kernel factor."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) not in (2, 3):
            raise DomainError(f"sigma must have length 2 or 3, got {len(entries)}")
        if any(e not in (1, 2) for e in entries):
            raise DomainError(f"sigma entries must be 1 or 2, got {entries}")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def complement(self) -> "SigmaVector":
        return SigmaVector(tuple(3 - e for e in self.entries))


def enumerate_sigma(m: int) -> list[SigmaVector]:
    """All 2**m sigma vectors in lexicographic order."""
    if m not in (2, 3):
        raise DomainError(f"m must be 2 or 3, got {m!r}")
    return [SigmaVector(t) for t in itertools.product((1, 2), repeat=m)]


def check_amplitude(a) -> float:
    """Validate the kernel amplitude: any finite nonzero real."""
    try:
        value = float(a)
    except (TypeError, ValueError):
        raise DomainError(f"amplitude must be a real number, got {a!r}") from None
    if not math.isfinite(value) or value == 0.0:
        raise DomainError(f"amplitude must be finite and nonzero, got {value!r}")
    return value
