"""Trig partial sums, L1/weak-L1 sizes, step coefficients, duality ratio."""

import cmath
import math

import numpy as np
import pytest

from lorentz_gm.fourier import (
    cesaro_mean,
    coefficient_energy,
    dirichlet_bound_report,
    duality_ratio,
    fourier_coeffs_step,
    l1_norm_trig,
    partial_sum,
    partial_sum_grid,
    weak_l1_report,
)
from lorentz_gm.model import PQ, ComplexSeq, StepFunction, TwoSidedSeq

E1 = ComplexSeq((1.0,))


def test_partial_sum_direct():
    c = ComplexSeq((1.0, 2.0, 3.0))
    x = 0.7
    expect = 2.0 * cmath.exp(2j * x) + 3.0 * cmath.exp(3j * x)
    assert partial_sum(c, 2, 3, x) == pytest.approx(expect)
    with pytest.raises(ValueError):
        partial_sum(c, 0, 3, x)
    with pytest.raises(ValueError):
        partial_sum(c, 3, 2, x)


def test_partial_sum_grid_matches_scalar():
    c = ComplexSeq((1.0, -0.5, 0.25j, 0.1))
    xs = np.array([0.1, 1.0, 2.5, math.pi])
    grid = partial_sum_grid(c, 1, 4, xs)
    for x, g in zip(xs, grid):
        assert g == pytest.approx(partial_sum(c, 1, 4, float(x)), rel=1e-12)
    shaped = partial_sum_grid(c, 1, 4, xs.reshape(2, 2))
    assert shaped.shape == (2, 2)


def test_l1_norm_closed_forms():
    assert l1_norm_trig(E1) == pytest.approx(math.pi, abs=1e-8)
    # |e^{ix} + e^{2ix}| = 2 cos(x/2) on (0, pi): integral 4
    assert l1_norm_trig(ComplexSeq((1.0, 1.0))) == pytest.approx(4.0, rel=1e-7)
    assert l1_norm_trig(ComplexSeq((0.0,))) == 0.0
    with pytest.raises(ValueError):
        l1_norm_trig(E1, tol=0.0)


def test_weak_l1_spike():
    r = weak_l1_report(E1, x_samples=1 << 10)
    assert r.passed
    assert r.lhs == pytest.approx(math.pi)
    assert r.rhs == 1.0
    assert r.constant == pytest.approx(6.0 * math.pi)


def test_weak_l1_zero_and_validation():
    assert weak_l1_report(ComplexSeq((0.0,))).passed
    with pytest.raises(ValueError):
        weak_l1_report(E1, x_samples=1)


def test_dirichlet_report_plain_spike():
    r = dirichlet_bound_report(E1, 1, 1, [math.pi / 2.0], "plain")
    assert r.name == "window-variation-bound"
    assert r.lhs == pytest.approx(1.0)
    assert r.constant == pytest.approx(4.0 * math.pi)
    assert r.passed


def test_dirichlet_report_gm2_window():
    c = ComplexSeq((1.0,) * 8)
    xs = np.linspace(1e-3, math.pi, 200)
    r = dirichlet_bound_report(c, 2, 8, xs, "gm2")
    assert r.name == "window-tail-bound"
    assert r.passed


def test_dirichlet_report_validation():
    with pytest.raises(ValueError):
        dirichlet_bound_report(E1, 1, 1, [], "plain")
    with pytest.raises(ValueError):
        dirichlet_bound_report(E1, 1, 1, [4.0], "plain")
    with pytest.raises(ValueError):
        dirichlet_bound_report(E1, 1, 1, [-0.1], "plain")
    with pytest.raises(ValueError):
        dirichlet_bound_report(E1, 1, 1, [1.0], "hybrid")


def test_step_coefficients_square_wave():
    f = StepFunction((math.pi,), (1.0,))
    c = fourier_coeffs_step(f, (-3, 3))
    assert c[0] == pytest.approx(0.5)
    assert c[1] == pytest.approx(-1j / math.pi)
    assert abs(c[2]) <= 1e-15
    assert abs(c[3]) == pytest.approx(1.0 / (3.0 * math.pi))
    assert c[-1] == pytest.approx(c[1].conjugate())  # real input


def test_step_coefficients_validation():
    with pytest.raises(ValueError):
        fourier_coeffs_step(StepFunction((7.0,), (1.0,)), (0, 1))
    with pytest.raises(ValueError):
        fourier_coeffs_step(StepFunction((1.0,), (1.0,)), (2, 1))


def test_coefficient_energy_parseval():
    f = StepFunction((math.pi,), (1.0,))
    # (1/2pi) int |f|^2 = 1/2
    assert coefficient_energy(f) == pytest.approx(0.5, rel=1e-12)
    c = fourier_coeffs_step(f, (-400, 400))
    partial = math.fsum(abs(c[n]) ** 2 for n in range(-400, 401))
    assert partial <= coefficient_energy(f) + 1e-12
    assert coefficient_energy(f) - partial < 1e-3


def test_coefficient_energy_two_pieces():
    f = StepFunction((1.0, 2.0), (2.0, -1.0))
    expect = (4.0 * 1.0 + 1.0 * 1.0) / (2.0 * math.pi)
    assert coefficient_energy(f) == pytest.approx(expect, rel=1e-12)


def test_cesaro_mean():
    c = TwoSidedSeq((1.0, 2.0, 3.0), -1)
    assert cesaro_mean(c, 0) == 2.0 + 0j
    assert cesaro_mean(c, 1) == 2.0 + 0j
    assert cesaro_mean(c, 2) == pytest.approx(1.2)
    with pytest.raises(ValueError):
        cesaro_mean(c, -1)


def test_duality_ratio_power_sequence():
    c = ComplexSeq(tuple(1.0 / math.sqrt(k) for k in range(1, 65)))
    r = duality_ratio(c, PQ(2.0, 2.0), 64, grid=1 << 10)
    assert r.passed
    assert 0.5 < r.ratio < 0.65
    assert r.constant < 0.01  # recorded drift


def test_duality_ratio_validation():
    with pytest.raises(ValueError):
        duality_ratio(E1, PQ(1.0, 1.0), 1)
    with pytest.raises(ValueError):
        duality_ratio(E1, PQ(2.0, 2.0), 1, grid=1)
    z = duality_ratio(ComplexSeq((0.0, 0.0)), PQ(2.0, 2.0), 2)
    assert z.passed and z.lhs == 0.0 and math.isnan(z.ratio)
