"""Independent numerical checks of the closed-form moment formulas.

Nothing in here is used by :mod:`genrose.moments`.  The module offers

* direct quadrature of the two one-dimensional integral identities that
  produce every beta factor (half-line product of powers, and the interval
  integral),
* the ordered-simplex integral, both numerically and in closed form,
* a second assembly of mu2 and mu3 that goes through the sigma-sum of beta
  prefactors times simplex integrals, written for general m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .parameters import GammaPair, SigmaVector, check_amplitude, enumerate_sigma
from .quadrature import QuadratureConfig, integrate_singular
from .special import beta, log_beta, log_gamma

__all__ = [
    "CheckResult",
    "BetaExponents",
    "kernel_g",
    "half_line_closed",
    "check_half_line_integral",
    "check_interval_integral",
    "simplex_integral_numeric",
    "simplex_integral_closed",
    "simplex_exponents",
    "j_sigma",
    "c_m_terms",
    "c_m_semianalytic",
    "moment_semianalytic",
]


class CheckResult(NamedTuple):
    numeric: float
    closed: float


def kernel_g(p: GammaPair, A, x, y):
    """Symmetrized kernel (A/2)(x+^g1 y+^g2 + x+^g2 y+^g1); zero unless x, y > 0."""
    A = check_amplitude(A)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    pos = (x > 0) & (y > 0)
    xs = np.where(pos, x, 1.0)
    ys = np.where(pos, y, 1.0)
    g1, g2 = p.gamma1, p.gamma2
    val = 0.5 * A * (xs**g1 * ys**g2 + xs**g2 * ys**g1)
    out = np.where(pos, val, 0.0)
    return float(out) if out.ndim == 0 else out


def _check_half_exponent(v, name):
    if not (-1.0 < v < -0.5):
        raise DomainError(f"{name} must lie in (-1, -1/2), got {v!r}")


def half_line_closed(a, b, s1, s2) -> float:
    """(s2-s1)+^(a+b+1) B(a+1,-a-b-1) + (s1-s2)+^(a+b+1) B(b+1,-a-b-1)."""
    e = a + b + 1.0
    if s1 < s2:
        return (s2 - s1) ** e * beta(a + 1.0, -e)
    return (s1 - s2) ** e * beta(b + 1.0, -e)


def _power_tail(e_near, e_far, d, R):
    """int_R^inf v^e_near (v+d)^e_far dv by binomial expansion in d/v (R > d)."""
    e = e_near + e_far + 1.0
    terms = []
    coef = 1.0
    ratio = d / R
    rk = 1.0
    for k in range(400):
        if k:
            coef *= (e_far - k + 1) / k
            rk *= ratio
        term = coef * rk * R**e / (k - e)
        terms.append(term)
        if k > 2 and abs(term) < 1e-18 * abs(terms[0]):
            break
    return math.fsum(terms)


def check_half_line_integral(a, b, s1, s2, cfg: QuadratureConfig | None = None) -> CheckResult:
    """Quadrature of int_R (s1-u)+^a (s2-u)+^b du against its beta closed form.

    The range below min(s1, s2) is cut at ``cfg.truncation_radius``; the
    cut-off tail is added from its binomial series.  Between the singular
    end and the cut the integral runs over geometrically growing panels.
    """
    cfg = cfg or QuadratureConfig()
    _check_half_exponent(a, "a")
    _check_half_exponent(b, "b")
    if s1 == s2:
        raise DomainError("s1 and s2 must differ")
    d = abs(s2 - s1)
    e_near, e_far = (a, b) if s1 < s2 else (b, a)
    R = float(cfg.truncation_radius)
    if R <= 2.0 * d:
        raise DomainError(f"truncation radius {R} must exceed twice |s2 - s1| = {2 * d}")

    # v = min(s1, s2) - u; singular power at v = 0, smooth beyond v = d
    near = integrate_singular(lambda dl, dr: (dl + d) ** e_far, d, e_near, 0.0, cfg).value

    n_panels = max(1, math.ceil(math.log(R / d) / math.log(4.0)))
    edges = d * np.geomspace(1.0, R / d, n_panels + 1)
    edges[-1] = R
    starts = edges[:-1][:, None]

    def mid_integrand(dl, dr):
        v = starts + dl
        return v**e_near * (v + d) ** e_far

    middle = integrate_singular(mid_integrand, np.diff(edges), 0.0, 0.0, cfg).value
    tail = _power_tail(e_near, e_far, d, R)
    numeric = math.fsum([float(near), *np.asarray(middle, dtype=float).tolist(), tail])
    return CheckResult(numeric, half_line_closed(a, b, s1, s2))


def check_interval_integral(a, b, x, y, cfg: QuadratureConfig | None = None) -> CheckResult:
    """Quadrature of int_x^y (u-x)^a (y-u)^b du against (y-x)^(a+b+1) B(a+1, b+1)."""
    cfg = cfg or QuadratureConfig()
    if not (a > -1.0 and b > -1.0):
        raise DomainError(f"a and b must exceed -1, got {a!r}, {b!r}")
    if not x < y:
        raise DomainError(f"need x < y, got {x!r}, {y!r}")
    w = y - x
    numeric = integrate_singular(lambda dl, dr: 1.0, w, a, b, cfg).value
    closed = w ** (a + b + 1.0) * beta(a + 1.0, b + 1.0)
    return CheckResult(float(numeric), closed)


@dataclass(frozen=True)
class BetaExponents:
    """Exponents of the ordered-simplex integral

        int_{0<s1<...<sm<1} (sm-s1)^b1 (s2-s1)^b2 ... (sm-s_{m-1})^bm ds.
    """

    betas: tuple

    def __post_init__(self):
        betas = tuple(float(b) for b in self.betas)
        object.__setattr__(self, "betas", betas)
        if len(betas) not in (2, 3):
            raise DomainError(f"only m = 2 or 3 is supported, got m = {len(betas)}")
        if any(not b > -1.0 for b in betas):
            raise DomainError(f"every exponent must exceed -1, got {betas}")
        if not sum(betas) + len(betas) > 1.0:
            raise DomainError(f"need sum(betas) + m > 1, got {sum(betas) + len(betas)}")

    @property
    def m(self) -> int:
        return len(self.betas)


def simplex_integral_closed(b: BetaExponents) -> float:
    """Closed form: Gamma(b2+1)...Gamma(bm+1) / Gamma(b2+...+bm+m-1) / ((m+S)(m-1+S))."""
    m = b.m
    total = sum(b.betas)
    rest = b.betas[1:]
    log_ratio = sum(log_gamma(x + 1.0) for x in rest) - log_gamma(sum(rest) + m - 1.0)
    return math.exp(log_ratio) / ((m + total) * (m - 1 + total))


def simplex_integral_numeric(b: BetaExponents, cfg: QuadratureConfig | None = None) -> float:
    """Numerical value of the ordered-simplex integral.

    Scaling out the largest time leaves a radial factor int_0^1 s^(S+m-1) ds
    and an (m-1)-dimensional integral over 0 < u1 < ... < u_{m-1} < 1.  In
    the distance r = 1 - u1 the latter is

        m = 2:  int_0^1 r^(b1+b2) dr
        m = 3:  int_0^1 r^b1 [int_0^r v^b2 (r-v)^b3 dv] dr,

    evaluated here by nested singularity-aware quadrature.
    """
    cfg = cfg or QuadratureConfig()
    m = b.m
    one = lambda dl, dr: 1.0  # noqa: E731
    radial = integrate_singular(one, 1.0, sum(b.betas) + m - 1.0, 0.0, cfg).value
    if m == 2:
        reduced = integrate_singular(one, 1.0, b.betas[0] + b.betas[1], 0.0, cfg).value
    else:
        b1, b2, b3 = b.betas

        def outer(r, _):
            return integrate_singular(one, r, b2, b3, cfg).value

        reduced = integrate_singular(outer, 1.0, b1, 0.0, cfg).value
    return float(radial) * float(reduced)


def simplex_exponents(p: GammaPair, sigma: SigmaVector) -> BetaExponents:
    """Exponents b1 = g_{s_m'} + g_{s_1} + 1, b_i = g_{s_{i-1}'} + g_{s_i} + 1."""
    comp = sigma.complement()
    m = len(sigma)
    betas = [p.gamma(comp[m - 1]) + p.gamma(sigma[0]) + 1.0]
    for i in range(1, m):
        betas.append(p.gamma(comp[i - 1]) + p.gamma(sigma[i]) + 1.0)
    return BetaExponents(tuple(betas))


def j_sigma(p: GammaPair, sigma: SigmaVector, cfg: QuadratureConfig | None = None) -> float:
    """Simplex integral indexed by sigma; closed form unless ``cfg`` is given."""
    b = simplex_exponents(p, sigma)
    if cfg is None:
        return simplex_integral_closed(b)
    return simplex_integral_numeric(b, cfg)


def _log_prefactor(p: GammaPair, sigma: SigmaVector) -> float:
    comp = sigma.complement()
    m = len(sigma)
    g = p.gamma
    acc = log_beta(g(sigma[0]) + 1.0, -g(comp[m - 1]) - g(sigma[0]) - 1.0)
    for i in range(1, m):
        acc += log_beta(g(comp[i - 1]) + 1.0, -g(comp[i - 1]) - g(sigma[i]) - 1.0)
    return acc


def c_m_terms(p: GammaPair, m: int, cfg: QuadratureConfig | None = None) -> list[float]:
    """Per-sigma summands (beta prefactor times J_sigma), lexicographic order."""
    return [math.exp(_log_prefactor(p, s)) * j_sigma(p, s, cfg) for s in enumerate_sigma(m)]


def c_m_semianalytic(p: GammaPair, A, m: int, cfg: QuadratureConfig | None = None) -> float:
    """c_m = m! A^m 2^-m * sum_sigma prefactor(sigma) * J_sigma."""
    A = check_amplitude(A)
    terms = c_m_terms(p, m, cfg)
    return math.factorial(m) * A**m * 2.0**-m * math.fsum(terms)


def moment_semianalytic(p: GammaPair, A, m: int, cfg: QuadratureConfig | None = None) -> float:
    """mu_m = 2^(m-1) (m-1)! c_m, the m-th cumulant of the double integral."""
    return 2.0 ** (m - 1) * math.factorial(m - 1) * c_m_semianalytic(p, A, m, cfg)
