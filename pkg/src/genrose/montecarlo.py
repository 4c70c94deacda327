"""Monte Carlo sampling of Z_{gamma1,gamma2}(1) as an end-to-end smoke test.

Discretization
--------------
The Brownian measure is replaced by independent cell increments W_i on a
mesh of the x-axis: ``noise_points`` equal cells on [0, 1] plus
``tail_cells`` geometrically growing cells on [-truncation, 0].  The kernel

    h(x, y) = int_0^1 g(s - x, s - y) ds

is projected onto cell-wise constants.  Because the x-integral of
(s - x)+^gamma over a cell is elementary, the projected kernel reduces to a
Gram matrix of those cell integrals, with only the s-integral done by
Gauss-Legendre (``grid_points_n`` nodes per cell of [0, 1]).  The diagonal
cells enter through the Wick products W_i^2 - |c_i|, the discrete form of
excluding the diagonal, so the discretized Z has mean exactly zero.

Diagonalizing the (scaled) projected kernel gives
Z_n = sum_k lam_k (eta_k^2 - 1) with iid standard normal eta_k.

Residual
--------
h is singular along x = y in [0, 1] and the projection misses variance
of order n^-(2a+3), a = gamma1 + gamma2, which is slow for H near 1/2.
With ``complete_residual`` the missing variance is estimated by Aitken
extrapolation of the discretized variances at n/4, n/2 and n cells and
added back as an independent Gaussian (many tiny chi-square terms).  The
closed-form moments are never consulted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .parameters import GammaPair, check_amplitude

__all__ = ["McConfig", "McResult", "Spectrum", "discretized_spectrum", "mc_moments"]


@dataclass(frozen=True)
class McConfig:
    grid_points_n: int = 4
    noise_points: int = 400
    tail_cells: int = 300
    truncation: float = 1e10
    replications: int = 100_000
    seed: int = 0
    complete_residual: bool = True
    chunk_size: int = 10_000

    def __post_init__(self):
        for name in ("grid_points_n", "noise_points", "tail_cells", "replications", "chunk_size"):
            if int(getattr(self, name)) < 2:
                raise DomainError(f"{name} must be >= 2")
        if not self.truncation > 1.0:
            raise DomainError("truncation must exceed 1")
        if self.complete_residual and self.noise_points % 4:
            raise DomainError("noise_points must be a multiple of 4 when completing the residual")
        if not 0 <= int(self.seed) < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray
    variance: float
    third_moment: float


@dataclass(frozen=True)
class McResult:
    mean: float
    m2: float
    m3: float
    stderr_mean: float
    stderr2: float
    stderr3: float
    discretized_variance: float
    discretized_m3: float
    residual_variance: float
    replications: int

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def _edges(n_inner, cfg):
    left = -np.geomspace(1.0 / cfg.noise_points, cfg.truncation, cfg.tail_cells)[::-1]
    return np.concatenate([left, np.linspace(0.0, 1.0, n_inner + 1)])


def _cell_integrals(gam, a, b, s, width):
    # int over [a, b] of (s - x)+^gam dx, divided by sqrt(b - a)
    e = gam + 1.0
    upper = np.clip(s[None, :] - a[:, None], 0.0, None) ** e
    lower = np.clip(s[None, :] - b[:, None], 0.0, None) ** e
    return (upper - lower) / (e * np.sqrt(width)[:, None])


def discretized_spectrum(p: GammaPair, A, n_inner: int, cfg: McConfig) -> Spectrum:
    """Eigenvalues of the projected kernel with ``n_inner`` cells on [0, 1]."""
    A = check_amplitude(A)
    edges = _edges(n_inner, cfg)
    a, b = edges[:-1], edges[1:]
    width = b - a
    x, w = np.polynomial.legendre.leggauss(int(cfg.grid_points_n))
    inner = np.linspace(0.0, 1.0, n_inner + 1)
    h = 1.0 / n_inner
    s = ((inner[:-1] + 0.5 * h)[:, None] + 0.5 * h * x[None, :]).ravel()
    ws = np.tile(0.5 * h * w, n_inner)
    G1 = _cell_integrals(p.gamma1, a, b, s, width)
    G2 = _cell_integrals(p.gamma2, a, b, s, width)
    cross = (G1 * ws) @ G2.T
    K = 0.5 * A * (cross + cross.T)
    lam = np.linalg.eigvalsh(K)
    return Spectrum(lam, 2.0 * float(np.sum(lam**2)), 8.0 * float(np.sum(lam**3)))


def _aitken_residual(variances):
    v1, v2, v3 = variances
    d1, d2 = v2 - v1, v3 - v2
    if not (d1 > 0 and d2 > 0 and d2 < d1):
        return 0.0
    r = d2 / d1
    return d2 * r / (1.0 - r)


def mc_moments(p: GammaPair, A, cfg: McConfig | None = None) -> McResult:
    """Sample moments of the discretized Z(1); deterministic given ``cfg``.

    Replications are drawn in chunks, each with its own generator spawned
    from ``cfg.seed``, so increasing ``replications`` extends the same
    stream.
    """
    cfg = cfg or McConfig()
    A = check_amplitude(A)
    n = int(cfg.noise_points)
    full = discretized_spectrum(p, A, n, cfg)
    residual = 0.0
    if cfg.complete_residual:
        coarse = [discretized_spectrum(p, A, n // k, cfg).variance for k in (4, 2)]
        residual = _aitken_residual([*coarse, full.variance])
    lam = full.eigenvalues
    sd_res = math.sqrt(residual)

    reps = int(cfg.replications)
    chunk = int(cfg.chunk_size)
    n_chunks = -(-reps // chunk)
    seeds = np.random.SeedSequence(int(cfg.seed)).spawn(n_chunks)
    sums = np.zeros(5)
    for i, ss in enumerate(seeds):
        size = min(chunk, reps - i * chunk)
        rng = np.random.Generator(np.random.PCG64(ss))
        eta = rng.standard_normal((size, lam.size))
        z = (eta * eta - 1.0) @ lam
        if cfg.complete_residual:
            z += sd_res * rng.standard_normal(size)
        z2 = z * z
        z3 = z2 * z
        sums += [z.sum(), z2.sum(), z3.sum(), (z2 * z2).sum(), (z3 * z3).sum()]

    mean = sums[0] / reps
    m2 = sums[1] / reps
    m3 = sums[2] / reps
    m4 = sums[3] / reps
    m6 = sums[4] / reps
    return McResult(
        mean=float(mean),
        m2=float(m2),
        m3=float(m3),
        stderr_mean=math.sqrt(max(m2 - mean**2, 0.0) / reps),
        stderr2=math.sqrt(max(m4 - m2**2, 0.0) / reps),
        stderr3=math.sqrt(max(m6 - m3**2, 0.0) / reps),
        discretized_variance=full.variance,
        discretized_m3=full.third_moment,
        residual_variance=residual,
        replications=reps,
    )
