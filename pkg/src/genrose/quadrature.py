"""Quadrature for integrands with algebraic endpoint singularities.

Every rule here integrates over an interval ``[0, width]`` written in
distance coordinates: the integrand receives ``dl`` (distance to the left
end) and ``dr`` (distance to the right end) instead of the abscissa, so a
singular factor such as ``dr**-0.9`` never sees a rounded-off zero.

``integrate_singular`` handles

    int_0^w dl^left_exp * dr^right_exp * f(dl, dr) d(dl),   exponents > -1,

either by splitting at the midpoint and removing each power with the
substitution ``dl = t**(1/(1+exp))`` (schemes ``tanh_sinh`` and
``adaptive_simpson``), or by Gauss-Jacobi nodes carrying the weight
exactly (scheme ``gauss_jacobi``).  ``width`` may be a 1-D array, in which
case all intervals are integrated at once and ``f`` gets 2-D arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np
from scipy.special import roots_jacobi

from .errors import DomainError, QuadratureError

__all__ = [
    "QuadratureConfig",
    "QuadResult",
    "SCHEMES",
    "tanh_sinh",
    "adaptive_simpson",
    "gauss_jacobi",
    "integrate_singular",
]

SCHEMES = ("tanh_sinh", "gauss_jacobi", "adaptive_simpson")


@dataclass(frozen=True)
class QuadratureConfig:
    """Settings for the numerical oracles.

    ``max_level_or_nodes`` is the maximum refinement level for tanh-sinh
    (step ``2**-level``), a quarter of the maximum recursion depth for
    adaptive Simpson, or the node count for Gauss-Jacobi.  ``truncation_radius`` cuts
    half-line integrals; the discarded tail is added back from its series.
    """

    scheme: str = "tanh_sinh"
    max_level_or_nodes: int = 10
    abs_tol: float = 1e-14
    rel_tol: float = 1e-12
    truncation_radius: float = 100.0

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise DomainError(f"unknown quadrature scheme {self.scheme!r}; expected one of {SCHEMES}")
        if int(self.max_level_or_nodes) < 2:
            raise DomainError("max_level_or_nodes must be >= 2")
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("tolerances must be positive")
        if not self.truncation_radius > 0:
            raise DomainError("truncation_radius must be positive")


class QuadResult(NamedTuple):
    value: np.ndarray | float
    error: float
    evaluations: int


Integrand = Callable[[np.ndarray, np.ndarray], np.ndarray]

# Abscissae of the tanh-sinh rule are cut at |t| <= _T_MAX; at that point the
# distance to the endpoint is ~exp(-pi*sinh(6)) ~ 1e-275 of the width.
_T_MAX = 6.0
# Intervals shorter than this are integrated as empty.
_TINY_WIDTH = 1e-280


def _logistic_pair(t):
    """Return (u, 1-u) for u = 1/(1 + exp(-pi*sinh t)), both to full precision."""
    z = math.pi * np.sinh(t)
    with np.errstate(over="ignore"):
        lo = 1.0 / (1.0 + np.exp(z))   # 1 - u
        hi = 1.0 / (1.0 + np.exp(-z))  # u
    return hi, lo


def _ts_level_terms(f, width, ts, h):
    """Weighted integrand sum over the abscissae ``ts`` (1-D), shape of width."""
    u, v = _logistic_pair(ts)
    w = h * math.pi * np.cosh(ts) * u * v
    keep = w > 0
    u, v, w = u[keep], v[keep], w[keep]
    width = np.asarray(width, dtype=float)
    wb = width[..., None]
    dl = wb * u
    dr = wb * v
    with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
        vals = np.broadcast_to(np.asarray(f(dl, dr), dtype=float), dl.shape)
        contrib = np.where(w > 0, vals * w, 0.0)
    return contrib.sum(axis=-1) * width, u.size


def tanh_sinh(f: Integrand, width, cfg: QuadratureConfig | None = None) -> QuadResult:
    """Tanh-sinh (double exponential) rule on [0, width].

    Halves the step until two successive levels agree to the tolerance in
    ``cfg``.  Endpoint behaviour like ``dl**-0.5`` is tolerated, but
    stronger singularities should go through ``integrate_singular``.
    """
    cfg = cfg or QuadratureConfig()
    h = 1.0
    ts = np.arange(-_T_MAX, _T_MAX + 0.5 * h, h)
    total, nev = _ts_level_terms(f, width, ts, 1.0)
    estimate = total
    err = math.inf
    for level in range(1, int(cfg.max_level_or_nodes) + 1):
        h *= 0.5
        ts = np.arange(-_T_MAX + h, _T_MAX, 2 * h)
        new, n = _ts_level_terms(f, width, ts, 1.0)
        nev += n
        total = total + new
        prev, estimate = estimate, total * h
        diff = np.abs(estimate - prev)
        err = float(np.max(diff)) if np.size(diff) else 0.0
        bound = np.maximum(cfg.abs_tol, cfg.rel_tol * np.abs(estimate))
        if level >= 3 and np.all(diff <= bound):
            return QuadResult(estimate, err, nev)
        if not np.all(np.isfinite(estimate)):
            break
    raise QuadratureError(
        f"tanh-sinh did not converge (error estimate {err:.3g})", estimate=estimate, error=err
    )


def adaptive_simpson(f: Integrand, width, cfg: QuadratureConfig | None = None) -> QuadResult:
    """Recursive adaptive Simpson rule on [0, width] (scalar width only)."""
    cfg = cfg or QuadratureConfig()
    if np.ndim(width) != 0:
        vals = [adaptive_simpson(f, float(w), cfg) for w in np.asarray(width, dtype=float)]
        return QuadResult(
            np.array([r.value for r in vals]),
            max((r.error for r in vals), default=0.0),
            sum(r.evaluations for r in vals),
        )
    w = float(width)
    if w == 0.0:
        return QuadResult(0.0, 0.0, 0)

    def fx(x):
        x = np.asarray(x, dtype=float)
        return np.asarray(f(x, w - x), dtype=float)

    max_depth = 4 * int(cfg.max_level_or_nodes)
    fa, fm, fb = fx(np.array([0.0, 0.5 * w, w]))
    whole = w * (fa + 4 * fm + fb) / 6.0
    nev = 3
    total = 0.0
    err_total = 0.0
    # (a, b, fa, fm, fb, whole, tol, depth)
    stack = [(0.0, w, fa, fm, fb, whole, max(cfg.abs_tol, cfg.rel_tol * abs(whole)), 0)]
    while stack:
        a, b, fa, fm, fb, whole, tol, depth = stack.pop()
        m = 0.5 * (a + b)
        flm, frm = fx(np.array([0.5 * (a + m), 0.5 * (m + b)]))
        nev += 2
        left = (m - a) * (fa + 4 * flm + fm) / 6.0
        right = (b - m) * (fm + 4 * frm + fb) / 6.0
        delta = left + right - whole
        if abs(delta) <= 15 * tol or depth >= max_depth:
            total += left + right + delta / 15
            err_total += abs(delta) / 15
        else:
            stack.append((m, b, fm, frm, fb, right, tol / 2, depth + 1))
            stack.append((a, m, fa, flm, fm, left, tol / 2, depth + 1))
    if not err_total <= max(cfg.abs_tol, cfg.rel_tol * abs(total)):
        raise QuadratureError(
            f"adaptive Simpson missed tolerance (error estimate {err_total:.3g})",
            estimate=total,
            error=err_total,
        )
    return QuadResult(total, err_total, nev)


def gauss_jacobi(f: Integrand, width, left_exp, right_exp, n) -> float | np.ndarray:
    """n-point Gauss-Jacobi sum for int_0^w dl^left_exp dr^right_exp f(dl, dr)."""
    x, wts = roots_jacobi(int(n), right_exp, left_exp)
    width = np.asarray(width, dtype=float)
    half = 0.5 * width[..., None]
    dl = half * (1.0 + x)
    dr = half * (1.0 - x)
    vals = np.broadcast_to(np.asarray(f(dl, dr), dtype=float), dl.shape)
    scale = (0.5 * width) ** (left_exp + right_exp + 1.0)
    return (vals * wts).sum(axis=-1) * scale


def _base_rule(cfg):
    return adaptive_simpson if cfg.scheme == "adaptive_simpson" else tanh_sinh


def integrate_singular(
    f: Integrand,
    width,
    left_exp: float = 0.0,
    right_exp: float = 0.0,
    cfg: QuadratureConfig | None = None,
) -> QuadResult:
    """Integrate ``dl**left_exp * dr**right_exp * f(dl, dr)`` over [0, width].

    ``f`` must be bounded (or at worst mildly singular) at both ends; the
    algebraic powers are removed analytically before the base rule runs.
    """
    cfg = cfg or QuadratureConfig()
    if not (left_exp > -1.0 and right_exp > -1.0):
        raise DomainError(f"endpoint exponents must exceed -1, got {left_exp}, {right_exp}")
    width = np.asarray(width, dtype=float)
    if np.any(width < 0) or not np.all(np.isfinite(width)):
        raise DomainError("width must be finite and non-negative")

    if cfg.scheme == "gauss_jacobi":
        n = int(cfg.max_level_or_nodes)
        coarse = gauss_jacobi(f, width, left_exp, right_exp, n)
        fine = gauss_jacobi(f, width, left_exp, right_exp, 2 * n)
        diff = np.abs(fine - coarse)
        err = float(np.max(diff)) if diff.size else 0.0
        if not np.all(diff <= np.maximum(cfg.abs_tol, cfg.rel_tol * np.abs(fine))):
            raise QuadratureError(
                f"Gauss-Jacobi with {2 * n} nodes missed tolerance (error estimate {err:.3g})",
                estimate=fine,
                error=err,
            )
        return QuadResult(fine if width.ndim else float(fine), err, 3 * n)

    rule = _base_rule(cfg)
    if rule is adaptive_simpson and width.ndim:
        parts = [integrate_singular(f, float(w), left_exp, right_exp, cfg) for w in width.ravel()]
        return QuadResult(
            np.array([r.value for r in parts]).reshape(width.shape),
            max((r.error for r in parts), default=0.0),
            sum(r.evaluations for r in parts),
        )
    half = 0.5 * width
    # subnormal widths lose the precision the substitution relies on
    zero = half < _TINY_WIDTH
    safe_half = np.where(zero, 1.0, half)

    # left half: dl = t**p, so dl**left_exp d(dl) = p dt
    p = 1.0 / (1.0 + left_exp)
    t_left = safe_half ** (1.0 + left_exp)
    safe_width = np.where(zero, 2.0, width)
    wl = safe_width[..., None] if width.ndim else safe_width

    def f_left(t, _tr):
        dl = t**p
        dr = wl - dl
        return p * dr**right_exp * f(dl, dr)

    # right half: dr = t**q
    q = 1.0 / (1.0 + right_exp)
    t_right = safe_half ** (1.0 + right_exp)

    def f_right(t, _tr):
        dr = t**q
        dl = wl - dr
        return q * dl**left_exp * f(dl, dr)

    left = rule(f_left, t_left, cfg)
    right = rule(f_right, t_right, cfg)
    value = np.where(zero, 0.0, np.asarray(left.value) + np.asarray(right.value))
    if value.ndim == 0:
        value = float(value)
    return QuadResult(value, left.error + right.error, left.evaluations + right.evaluations)
