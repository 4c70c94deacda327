"""Verification suites run by ``genrose verify`` and the acceptance tests.

Each suite returns a list of check records
``{"check", "achieved_error", "tolerance", "pass"}``; the record order and
contents depend only on the seed and tolerances.
"""

from __future__ import annotations

import math

import numpy as np

from . import moments, oracle
from .errors import DomainError, QuadratureError
from .montecarlo import McConfig, mc_moments
from .parameters import GammaPair
from .quadrature import QuadratureConfig
from .special import beta, beta_by_integral

__all__ = ["DEFAULT_TOLERANCES", "SUITES", "random_pairs", "run_suite"]

DEFAULT_TOLERANCES = {
    "beta_integral": 1e-8,
    "half_line": 1e-7,
    "interval": 1e-7,
    "simplex": 1e-7,
    "mu2": 1e-10,
    "mu3": 1e-10,
    "mu3_numeric": 1e-6,
    "mc_mean_sigmas": 3.0,
    "mc_m2": 0.05,
    "mc_m3": 0.15,
}

SUITES = ("lemmas", "pipeline", "mc")


def _record(name, err, tol):
    ok = bool(err <= tol) if math.isfinite(err) else False
    return {"check": name, "achieved_error": float(err), "tolerance": float(tol), "pass": ok}


def _rel(a, b):
    return abs(a - b) / abs(b)


def _mixed(a, b):
    return abs(a - b) / max(1.0, abs(b))


def random_pairs(rng, count, lo=-0.99, hi=-0.51):
    """``count`` valid exponent pairs, uniform on the domain inset by 0.01."""
    out = []
    while len(out) < count:
        g1, g2 = rng.uniform(lo, hi, 2)
        if g1 + g2 > -1.49:
            out.append(GammaPair(float(g1), float(g2)))
    return out


def _quad_check(name, fn, tol):
    try:
        numeric, closed = fn()
    except QuadratureError as exc:
        return _record(name, exc.error if exc.error is not None else math.inf, tol)
    return _record(name, _mixed(numeric, closed), tol)


def lemma_checks(seed, tol, cfg=None, draws=50, simplex_draws=30):
    cfg = cfg or QuadratureConfig()
    rng = np.random.default_rng(seed)
    out = []
    for k in range(20):
        x, y = (float(v) for v in rng.uniform(0.05, 5.0, 2))
        out.append(_record(f"beta_integral[{k}]", _rel(beta_by_integral(x, y, cfg), beta(x, y)), tol["beta_integral"]))
    for k in range(draws):
        a, b = (float(v) for v in rng.uniform(-0.99, -0.51, 2))
        s1 = float(rng.uniform(-1.0, 2.0))
        s2 = s1 + float(rng.choice([-1.0, 1.0]) * rng.uniform(0.05, 3.0))
        out.append(
            _quad_check(f"half_line[{k}]", lambda: oracle.check_half_line_integral(a, b, s1, s2, cfg), tol["half_line"])
        )
    for k in range(draws):
        a, b = (float(v) for v in rng.uniform(-0.95, 3.0, 2))
        x = float(rng.uniform(-2.0, 2.0))
        y = x + float(rng.uniform(0.1, 3.0))
        out.append(
            _quad_check(f"interval[{k}]", lambda: oracle.check_interval_integral(a, b, x, y, cfg), tol["interval"])
        )
    for m in (2, 3):
        k = 0
        while k < simplex_draws:
            betas = tuple(float(v) for v in rng.uniform(-0.9, 1.5, m))
            try:
                be = oracle.BetaExponents(betas)
            except DomainError:
                continue
            closed = oracle.simplex_integral_closed(be)
            try:
                err = _rel(oracle.simplex_integral_numeric(be, cfg), closed)
            except QuadratureError as exc:
                err = math.inf if exc.error is None else exc.error
            out.append(_record(f"simplex_m{m}[{k}]", err, tol["simplex"]))
            k += 1
    return out


def pipeline_checks(seed, tol, cfg=None, pairs=20, numeric_pairs=5):
    cfg = cfg or QuadratureConfig()
    rng = np.random.default_rng(seed)
    out = []
    for k, p in enumerate(random_pairs(rng, pairs)):
        out.append(_record(f"mu2[{k}]", _rel(oracle.moment_semianalytic(p, 1.0, 2), moments.mu2(p, 1.0)), tol["mu2"]))
        out.append(_record(f"mu3[{k}]", _rel(oracle.moment_semianalytic(p, 1.0, 3), moments.mu3(p, 1.0)), tol["mu3"]))
    for k, p in enumerate(random_pairs(rng, numeric_pairs)):
        try:
            err = _rel(oracle.moment_semianalytic(p, 1.0, 3, cfg), moments.mu3(p, 1.0))
        except QuadratureError as exc:
            err = math.inf if exc.error is None else exc.error
        out.append(_record(f"mu3_numeric[{k}]", err, tol["mu3_numeric"]))
    return out


def mc_checks(seed, tol, cfg=None, pair=(-0.7, -0.7)):
    """Loose consistency of Monte Carlo moments with the closed forms."""
    p = GammaPair(*pair)
    cfg = cfg or McConfig(seed=seed)
    res = mc_moments(p, moments.normalization_A(p), cfg)
    m3 = moments.standardized_m3(p)
    out = [
        _record("mc_mean", abs(res.mean), tol["mc_mean_sigmas"] * res.stderr_mean),
        _record("mc_m2", abs(res.m2 - 1.0), max(3.0 * res.stderr2, tol["mc_m2"])),
        _record("mc_m3", abs(res.m3 - m3), max(3.0 * res.stderr3, tol["mc_m3"] * abs(m3))),
    ]
    return out, res


def run_suite(name, seed=0, tolerances=None, quad_cfg=None, mc_cfg=None):
    tol = dict(DEFAULT_TOLERANCES)
    if tolerances:
        unknown = set(tolerances) - set(tol)
        if unknown:
            raise DomainError(f"unknown tolerance names: {sorted(unknown)}")
        tol.update(tolerances)
    if name == "lemmas":
        return lemma_checks(seed, tol, quad_cfg)
    if name == "pipeline":
        return pipeline_checks(seed, tol, quad_cfg)
    if name == "mc":
        if mc_cfg is None:
            mc_cfg = McConfig(seed=seed)
        return mc_checks(seed, tol, mc_cfg)[0]
    raise DomainError(f"unknown suite {name!r}; expected one of {SUITES}")
