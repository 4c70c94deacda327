import math

import numpy as np
import pytest

from genrose.errors import DomainError, QuadratureError
from genrose.quadrature import (
    SCHEMES,
    QuadratureConfig,
    adaptive_simpson,
    integrate_singular,
    tanh_sinh,
)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"scheme": "midpoint"},
        {"max_level_or_nodes": 1},
        {"abs_tol": 0.0},
        {"rel_tol": -1.0},
        {"truncation_radius": 0.0},
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(DomainError):
        QuadratureConfig(**kwargs)


def test_tanh_sinh_smooth():
    res = tanh_sinh(lambda dl, dr: np.exp(dl), 1.0)
    assert res.value == pytest.approx(math.e - 1.0, rel=1e-14)


def test_adaptive_simpson_smooth():
    res = adaptive_simpson(lambda dl, dr: np.cos(dl), 2.0)
    assert res.value == pytest.approx(math.sin(2.0), rel=1e-12)


@pytest.mark.parametrize("scheme", SCHEMES)
def test_singular_weight_against_closed_form(scheme):
    # int_0^1 x^-0.7 (1-x)^-0.2 e^x dx by series: sum_k B(k+0.3, 0.8)/k!
    from genrose.special import beta

    exact = math.fsum(beta(k + 0.3, 0.8) / math.factorial(k) for k in range(40))
    cfg = QuadratureConfig(scheme=scheme, max_level_or_nodes=30 if scheme == "gauss_jacobi" else 10)
    res = integrate_singular(lambda dl, dr: np.exp(dl), 1.0, -0.7, -0.2, cfg)
    assert res.value == pytest.approx(exact, rel=1e-10)


def test_vector_widths_match_scalar_calls():
    widths = np.array([0.0, 1e-12, 0.3, 1.0, 7.5])
    f = lambda dl, dr: 1.0 + dl * dr  # noqa: E731
    vec = integrate_singular(f, widths, -0.4, -0.8).value
    for w, v in zip(widths, vec):
        assert v == pytest.approx(integrate_singular(f, float(w), -0.4, -0.8).value, rel=1e-12, abs=0)


def test_exponent_must_exceed_minus_one():
    with pytest.raises(DomainError):
        integrate_singular(lambda dl, dr: 1.0, 1.0, -1.0, 0.0)


def test_non_convergence_reports_estimate():
    cfg = QuadratureConfig(max_level_or_nodes=2)
    with pytest.raises(QuadratureError) as info:
        tanh_sinh(lambda dl, dr: np.sqrt(dl), 1.0, cfg)
    assert info.value.estimate is not None
    assert info.value.error >= 0
