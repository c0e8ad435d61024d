"""Acceptance gate: the eleven verification suites, each with its time budget.

Every test runs one seeded suite end to end and requires (a) every report row
to pass and (b) the wall-clock budget to hold, so `pytest -v` on this file
prints one line per acceptance criterion.
"""

import time

from lorentz_gm.verify import run_suites


def _run(suite: str, budget_s: float):
    start = time.perf_counter()
    rows = run_suites([suite], seed=42)[suite]
    elapsed = time.perf_counter() - start
    failing = [(r.name, r.lhs, r.rhs) for r in rows if not r.passed]
    assert not failing, f"{suite}: failing rows {failing}"
    assert elapsed < budget_s, f"{suite}: {elapsed:.1f}s over the {budget_s:.0f}s budget"
    return rows


def test_01_rearrangement_equimeasurable_exactly():
    _run("equimeasurability", 5.0)


def test_02_splitting_functional_matches_oracle_and_display():
    _run("kfun", 5.0)


def test_03_decomposition_cost_within_nine_halves():
    _run("decompose", 30.0)


def test_04_splice_constant_bound():
    _run("splice", 10.0)


def test_05_class_inclusion_constants():
    _run("inclusions", 30.0)


def test_06_pointwise_rearrangement_bounds():
    _run("pointwise", 10.0)


def test_07_norm_equivalence_with_explicit_constants():
    _run("norms", 30.0)


def test_08_partial_sum_l1_and_weak_l1_bounds():
    _run("fourier", 120.0)


def test_09_averaging_transform_stability_envelope():
    _run("hardy", 60.0)


def test_10_sequence_function_duality_bracket():
    _run("duality", 120.0)


def test_11_window_functional_brackets():
    _run("gilbert", 30.0)
