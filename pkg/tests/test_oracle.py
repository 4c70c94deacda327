import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate
from scipy.special import beta as sbeta
from scipy.special import gamma as sgamma

from genrose import moments, oracle
from genrose.errors import DomainError
from genrose.parameters import GammaPair, SigmaVector, enumerate_sigma
from genrose.quadrature import QuadratureConfig

half_exp = st.floats(-0.99, -0.51)
free_exp = st.floats(-0.9, 2.0)


@st.composite
def valid_pairs(draw):
    g1 = draw(half_exp)
    g2 = draw(half_exp.filter(lambda g: g1 + g > -1.49))
    return GammaPair(g1, g2)


def test_kernel_outside_orthant_is_zero():
    assert oracle.kernel_g(GammaPair(-0.6, -0.7), 1.5, -1.0, 1.0) == 0.0


def test_kernel_equal_exponents():
    p = GammaPair(-0.7, -0.7)
    assert oracle.kernel_g(p, 3.0, 2.0, 0.5) == pytest.approx(3.0 * 2.0**-0.7 * 0.5**-0.7, rel=1e-15)


def test_kernel_at_ones():
    assert oracle.kernel_g(GammaPair(-0.6, -0.7), 2.0, 1.0, 1.0) == 2.0


@given(valid_pairs(), st.floats(0.01, 10), st.floats(0.01, 10))
def test_kernel_symmetric(p, x, y):
    assert oracle.kernel_g(p, 1.0, x, y) == pytest.approx(oracle.kernel_g(p, 1.0, y, x), rel=1e-15)


def test_kernel_vectorized():
    p = GammaPair(-0.6, -0.7)
    xs = np.array([-1.0, 0.5, 2.0])
    out = oracle.kernel_g(p, 1.0, xs, 1.0)
    assert out.shape == (3,) and out[0] == 0.0


def test_half_line_example():
    r = oracle.check_half_line_integral(-0.7, -0.7, 0.0, 1.0)
    assert r.closed == pytest.approx(sbeta(0.3, 0.4), rel=1e-14)
    assert r.numeric == pytest.approx(r.closed, rel=1e-7)


def test_half_line_other_branch():
    r = oracle.check_half_line_integral(-0.6, -0.7, 1.0, 0.0)
    assert r.closed == pytest.approx(sbeta(0.3, 0.3), rel=1e-14)
    assert r.numeric == pytest.approx(r.closed, rel=1e-7)


def test_half_line_against_scipy_quad():
    a, b, s1, s2 = -0.55, -0.8, 0.4, 1.9
    f = lambda u: (s1 - u) ** a * (s2 - u) ** b  # noqa: E731
    ref = integrate.quad(f, -np.inf, s1 - 1.0, epsabs=1e-13, epsrel=1e-12)[0]
    ref += integrate.quad(f, s1 - 1.0, s1, epsabs=1e-13, epsrel=1e-12, limit=200)[0]
    assert oracle.half_line_closed(a, b, s1, s2) == pytest.approx(ref, rel=1e-8)


@settings(max_examples=30, deadline=None)
@given(half_exp, half_exp, st.floats(-3, 3), st.floats(0.05, 5))
def test_half_line_relabeling(a, b, s1, gap):
    s2 = s1 + gap
    assert oracle.half_line_closed(a, b, s1, s2) == oracle.half_line_closed(b, a, s2, s1)
    r = oracle.check_half_line_integral(a, b, s1, s2)
    assert r.numeric == pytest.approx(r.closed, rel=1e-7)


def test_half_line_rejects_bad_input():
    with pytest.raises(DomainError):
        oracle.check_half_line_integral(-0.4, -0.7, 0.0, 1.0)
    with pytest.raises(DomainError):
        oracle.check_half_line_integral(-0.6, -0.7, 1.0, 1.0)
    with pytest.raises(DomainError):
        oracle.check_half_line_integral(-0.6, -0.7, 0.0, 80.0)


@pytest.mark.parametrize(
    "a, b, x, y, expected",
    [(0, 0, 0, 2, 2.0), (-0.5, -0.5, 0, 1, math.pi), (0.3, 1.7, -1, 3, 64 * sbeta(1.3, 2.7))],
)
def test_interval_examples(a, b, x, y, expected):
    r = oracle.check_interval_integral(a, b, x, y)
    assert r.closed == pytest.approx(expected, rel=1e-13)
    assert r.numeric == pytest.approx(expected, rel=1e-8)


@settings(max_examples=30, deadline=None)
@given(free_exp, free_exp, st.floats(-5, 5), st.floats(0.01, 5))
def test_interval_random(a, b, x, w):
    r = oracle.check_interval_integral(a, b, x, x + w)
    assert abs(r.numeric - r.closed) <= 1e-7 * max(1.0, abs(r.closed))


@pytest.mark.parametrize("betas, expected", [((0, 0), 0.5), ((0, 0, 0), 1 / 6)])
def test_simplex_volumes(betas, expected):
    b = oracle.BetaExponents(betas)
    assert oracle.simplex_integral_closed(b) == pytest.approx(expected, rel=1e-14)
    assert oracle.simplex_integral_numeric(b) == pytest.approx(expected, rel=1e-10)


def test_simplex_fractional_exponents():
    b = oracle.BetaExponents((-0.4, -0.3, -0.2))
    closed = oracle.simplex_integral_closed(b)
    assert closed > 0
    assert oracle.simplex_integral_numeric(b) == pytest.approx(closed, rel=1e-7)


def test_simplex_m2_brute_force():
    # direct 2-d integral over 0 < s1 < s2 < 1 of (s2 - s1)^(b1 + b2)
    b1, b2 = -0.3, 0.4
    ref = integrate.dblquad(lambda s2, s1: (s2 - s1) ** (b1 + b2), 0, 1, lambda s1: s1, 1)[0]
    got = oracle.simplex_integral_closed(oracle.BetaExponents((b1, b2)))
    assert got == pytest.approx(ref, rel=1e-7)


@pytest.mark.parametrize("betas", [(0.0,), (0, 0, 0, 0), (-1.0, 0.0), (-0.9, -0.9, -0.9)])
def test_simplex_exponents_validated(betas):
    with pytest.raises(DomainError):
        oracle.BetaExponents(betas)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.floats(-0.6, 1.5), min_size=2, max_size=3))
def test_simplex_closed_vs_numeric(betas):
    b = oracle.BetaExponents(tuple(betas))
    closed = oracle.simplex_integral_closed(b)
    assert oracle.simplex_integral_numeric(b) == pytest.approx(closed, rel=1e-7)


def test_j_sigma_equal_exponents():
    g = -0.7
    p = GammaPair(g, g)
    want = sgamma(2 * g + 2) ** 2 / sgamma(4 * g + 4) / (3 * (2 * g + 2) * (6 * g + 5))
    assert oracle.j_sigma(p, SigmaVector((1, 1, 1))) == pytest.approx(want, rel=1e-13)


def test_j_sigma_complement_equal_exponents():
    p = GammaPair(-0.62, -0.62)
    for s in enumerate_sigma(3):
        assert oracle.j_sigma(p, s) == pytest.approx(oracle.j_sigma(p, s.complement()), rel=1e-14)


def test_j_sigma_complement_differs_for_unequal_exponents():
    p = GammaPair(-0.625, -0.75)
    s = SigmaVector((1, 1, 2))
    assert oracle.j_sigma(p, s) != pytest.approx(oracle.j_sigma(p, s.complement()), rel=1e-3)


@given(valid_pairs())
def test_j_sigma_complement_matches_swapped_pair(p):
    for s in enumerate_sigma(3):
        assert oracle.j_sigma(p, s) == pytest.approx(oracle.j_sigma(p.swapped(), s.complement()), rel=1e-14)


def test_j_sigma_numeric_cross_check():
    p = GammaPair(-0.6, -0.7)
    s = SigmaVector((1, 2, 1))
    num = oracle.simplex_integral_numeric(oracle.simplex_exponents(p, s))
    assert oracle.j_sigma(p, s) == pytest.approx(num, rel=1e-7)
    assert oracle.j_sigma(p, s, QuadratureConfig()) == pytest.approx(num, rel=1e-15)


@pytest.mark.parametrize("p", [GammaPair(-0.7, -0.7), GammaPair(-0.6, -0.7)])
def test_m2_terms_collapse_pairwise(p):
    t = oracle.c_m_terms(p, 2)
    assert t[0] == pytest.approx(t[3], rel=1e-13)
    assert t[1] == pytest.approx(t[2], rel=1e-13)


@pytest.mark.parametrize("m, fn", [(2, moments.mu2), (3, moments.mu3)])
def test_semianalytic_matches_closed_forms(m, fn):
    p = GammaPair(-0.6, -0.7)
    assert oracle.moment_semianalytic(p, 1.0, m) == pytest.approx(fn(p, 1.0), rel=1e-8)


@settings(max_examples=40)
@given(valid_pairs(), st.sampled_from([0.5, 1.0, -2.0]))
def test_two_path_algebra(p, A):
    assert oracle.moment_semianalytic(p, A, 2) == pytest.approx(moments.mu2(p, A), rel=1e-10)
    assert oracle.moment_semianalytic(p, A, 3) == pytest.approx(moments.mu3(p, A), rel=1e-10)


def test_numeric_j_pipeline():
    p = GammaPair(-0.58, -0.77)
    got = oracle.moment_semianalytic(p, 1.0, 3, QuadratureConfig())
    assert got == pytest.approx(moments.mu3(p, 1.0), rel=1e-6)


def test_c_m_rejects_m4():
    with pytest.raises(DomainError):
        oracle.c_m_semianalytic(GammaPair(-0.7, -0.7), 1.0, 4)
