import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genrose.errors import DomainError
from genrose.parameters import (
    GammaPair,
    SigmaVector,
    alpha,
    check_amplitude,
    enumerate_sigma,
    hurst,
    make_gamma_pair,
    pair_from_alpha,
)

exponent = st.floats(-1.0, -0.5, exclude_min=True, exclude_max=True)


@st.composite
def valid_pairs(draw):
    g1 = draw(exponent)
    g2 = draw(exponent.filter(lambda g: g1 + g > -1.5))
    return GammaPair(g1, g2)


def test_valid_pair():
    p = make_gamma_pair(-0.7, -0.7)
    assert (p.gamma1, p.gamma2) == (-0.7, -0.7)


@pytest.mark.parametrize(
    "g1, g2, fragment",
    [
        (-0.5, -0.7, "gamma1 must lie in the open interval (-1, -1/2)"),
        (-0.7, -1.0, "gamma2 must lie in the open interval"),
        (-0.9, -0.7, "must exceed -3/2"),
        (-0.75, -0.75, "must exceed -3/2"),
        (math.nan, -0.7, "gamma1"),
    ],
)
def test_invalid_pairs(g1, g2, fragment):
    with pytest.raises(DomainError, match=fragment.replace("(", r"\(").replace(")", r"\)")):
        make_gamma_pair(g1, g2)


def test_near_boundary_pair_is_valid():
    make_gamma_pair(-0.505, -0.895)


@pytest.mark.parametrize(
    "pair, a, h",
    [((-0.7, -0.7), -1.4, 0.6), ((-0.65, -0.65), -1.3, 0.7), ((-0.6, -0.6), -1.2, 0.8), ((-0.55, -0.55), -1.1, 0.9)],
)
def test_alpha_and_hurst(pair, a, h):
    p = GammaPair(*pair)
    assert alpha(p) == pytest.approx(a, abs=1e-15)
    assert hurst(p) == pytest.approx(h, abs=1e-15)


def test_alpha_table4_example():
    assert alpha(GammaPair(-0.505, -0.595)) == pytest.approx(-1.1, abs=1e-15)


@given(valid_pairs())
def test_hurst_in_range(p):
    assert hurst(p) == alpha(p) + 2.0
    assert 0.5 < hurst(p) < 1.0


@given(valid_pairs())
def test_pair_from_alpha_round_trip(p):
    q = pair_from_alpha(alpha(p), p.gamma1)
    assert q.gamma1 == p.gamma1
    # alpha is rounded to the [1, 2) binade, so gamma2 comes back within one ulp
    assert abs(q.gamma2 - p.gamma2) <= math.ulp(1.0)


def test_pair_from_alpha_examples():
    p = pair_from_alpha(-1.4, -0.678)
    assert p.gamma2 == pytest.approx(-0.722, abs=1e-15)
    assert pair_from_alpha(-1.3, -0.505).gamma2 == pytest.approx(-0.795, abs=1e-15)
    with pytest.raises(DomainError):
        pair_from_alpha(-1.2, -0.7)


def test_enumerate_sigma():
    assert [s.entries for s in enumerate_sigma(2)] == [(1, 1), (1, 2), (2, 1), (2, 2)]
    s3 = enumerate_sigma(3)
    assert len(s3) == 8
    assert s3[0].entries == (1, 1, 1) and s3[-1].entries == (2, 2, 2)
    assert SigmaVector((1, 2, 1)).complement().entries == (2, 1, 2)


@pytest.mark.parametrize("m", [2, 3])
def test_complement_is_bijective_involution(m):
    sigmas = enumerate_sigma(m)
    assert len(set(sigmas)) == 2**m
    assert {s.complement() for s in sigmas} == set(sigmas)
    assert all(s.complement().complement() == s for s in sigmas)


@pytest.mark.parametrize("m", [1, 4])
def test_enumerate_sigma_rejects_m(m):
    with pytest.raises(DomainError):
        enumerate_sigma(m)


def test_sigma_entries_validated():
    with pytest.raises(DomainError):
        SigmaVector((1, 3))


def test_amplitude():
    assert check_amplitude(-2) == -2.0
    for bad in (0.0, math.inf, math.nan):
        with pytest.raises(DomainError):
            check_amplitude(bad)
