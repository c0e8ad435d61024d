"""Adaptive Gauss panels: exactness, seeds, depth cap plumbing."""

import math

import numpy as np
import pytest

from lorentz_gm.quadrature import (
    DEPTH_ENV,
    NonconvergenceError,
    adaptive_integral,
    max_bisection_depth,
)


def test_polynomial_single_panel():
    # degree 31 is exact for a 16-node rule
    val = adaptive_integral(lambda x: 5.0 * x**4, 0.0, 2.0)
    assert val == pytest.approx(32.0, rel=1e-14)


def test_oscillatory_integral():
    val = adaptive_integral(lambda x: np.abs(np.sin(40.0 * x)), 0.0, math.pi)
    assert val == pytest.approx(2.0, rel=1e-12)  # 40 arches of area 1/20 each


def test_empty_interval():
    assert adaptive_integral(lambda x: x, 1.0, 1.0) == 0.0
    assert adaptive_integral(lambda x: x, 2.0, 1.0) == 0.0


def test_seed_points_pre_split():
    kink = lambda x: np.abs(x - 0.5)
    seeded = adaptive_integral(kink, 0.0, 1.0, seeds=(0.5,))
    assert seeded == pytest.approx(0.25, rel=1e-13)
    # seeds outside the interval are ignored
    assert adaptive_integral(kink, 0.0, 1.0, seeds=(-3.0, 7.0)) == pytest.approx(0.25, rel=1e-9)


def test_depth_cap_raises():
    with pytest.raises(NonconvergenceError):
        adaptive_integral(
            lambda x: np.abs(np.sin(40.0 * x)), 0.0, math.pi, rel_tol=1e-13, max_depth=2
        )


def test_depth_env_parsing(monkeypatch):
    monkeypatch.delenv(DEPTH_ENV, raising=False)
    assert max_bisection_depth() == 40
    monkeypatch.setenv(DEPTH_ENV, "7")
    assert max_bisection_depth() == 7
    monkeypatch.setenv(DEPTH_ENV, "0")
    with pytest.raises(ValueError):
        max_bisection_depth()
    monkeypatch.setenv(DEPTH_ENV, "deep")
    with pytest.raises(ValueError):
        max_bisection_depth()


def test_env_controls_adaptive_runs(monkeypatch):
    monkeypatch.setenv(DEPTH_ENV, "1")
    with pytest.raises(NonconvergenceError):
        adaptive_integral(lambda x: np.abs(np.sin(40.0 * x)), 0.0, math.pi, rel_tol=1e-12)
