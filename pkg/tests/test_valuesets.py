import io
import math
import random
from fractions import Fraction as F

import numpy as np
import pytest

from bohrequiv import (
    ExponentSet,
    ExponentialSum,
    ValueCloud,
    compare_strip_values,
    decide_equiv,
    directed_hausdorff,
    eval_aux,
    evaluate,
    generate_member,
    grid_tolerance,
    hausdorff,
    natural_basis,
    sample_line,
    sample_torus,
    translation_parameters,
    verify_lemma1,
    verify_prop3,
    verify_prop4,
    verify_theorem1,
)
from bohrequiv.errors import BudgetExceeded, EmptyCloud, NoCertificate, NotEquivalent, OutsideStrip


def test_eval_aux_origin_is_value_at_zero(disk_sum):
    assert abs(eval_aux(disk_sum, 0.3, (0, 0)) - evaluate(disk_sum, 0.3, 0.0)) < 1e-12


def test_eval_aux_half_turn_cancels(disk_sum):
    assert abs(eval_aux(disk_sum, 0.0, (F(1, 2), 0))) < 1e-12


def test_eval_aux_special_choice(disk_sum):
    g = np.array(natural_basis(disk_sum.exponents).basis_values, dtype=float)
    for t in (-7.5, 0.0, 1.0, 123.4):
        assert abs(eval_aux(disk_sum, 0.2, tuple(t * g / (2 * math.pi)))
                   - evaluate(disk_sum, 0.2, t)) < 1e-12


def test_integral_basis_ignores_residues(gens1):
    f = ExponentialSum(ExponentSet.from_coords(gens1, [(1,), (2,)]), (1, 1))
    assert natural_basis(f.exponents).row_denominators == (1, 1)
    a = sample_torus(f, 0.0, 16, "all").points
    b = sample_torus(f, 0.0, 16, "zero").points
    assert np.array_equal(a, b)


def test_sample_line_constant(gens1):
    f = ExponentialSum(ExponentSet.from_coords(gens1, [(0,)]), (F(5, 2),))
    assert np.all(sample_line(f, 0.0, 10.0, 0.5).points == 2.5)


def test_sample_line_unit_circle(gens1):
    f = ExponentialSum(ExponentSet.from_coords(gens1, [(1,)]), (1,))
    pts = sample_line(f, 0.0, math.pi, 0.001).points
    assert np.max(np.abs(np.abs(pts) - 1)) < 1e-12


def test_sample_line_bounded(disk_sum):
    cloud = sample_line(disk_sum, 0.0, 100.0, 0.01)
    assert len(cloud) == 20001
    assert np.max(np.abs(cloud.points)) <= 2 + 1e-12


def test_sample_torus_four_points(gens1):
    f = ExponentialSum(ExponentSet.from_coords(gens1, [(1,)]), (1,))
    pts = sample_torus(f, 0.0, 4).points
    assert np.allclose(pts, [1, 1j, -1, -1j], atol=1e-15)


def test_sample_torus_halton_and_regenerate(disk_sum):
    c = sample_torus(disk_sum, 0.0, 16, method="halton")
    assert len(c) == 256
    assert np.array_equal(c.regenerate().points, c.points)


def test_budget_and_strip(disk_sum, gens1):
    with pytest.raises(BudgetExceeded):
        sample_torus(disk_sum, 0.0, 1000, budget=10**5)
    f = ExponentialSum(ExponentSet.from_coords(gens1, [(1,)]), (1,), strip=(0, 1))
    with pytest.raises(OutsideStrip):
        sample_torus(f, 2.0, 8)


def test_hausdorff_examples():
    a = np.array([0j, 1 + 1j])
    assert hausdorff(a, a) == 0
    assert hausdorff(np.array([0j]), np.array([3 + 4j])) == 5
    sup = np.concatenate([a, [10j, -4]])
    assert directed_hausdorff(a, sup) == 0
    assert hausdorff(a, sup) > 0
    with pytest.raises(EmptyCloud):
        hausdorff(np.array([], dtype=complex), a)
    with pytest.raises(EmptyCloud):
        ValueCloud(np.array([]), {}, None)


def test_hausdorff_hint_does_not_change_result():
    rng = np.random.default_rng(0)
    a = rng.normal(size=500) + 1j * rng.normal(size=500)
    b = rng.normal(size=300) + 1j * rng.normal(size=300)
    exact = max(np.min(np.abs(p - b)) for p in a)
    assert abs(directed_hausdorff(a, b, hint=1e-6) - exact) < 1e-12
    assert abs(directed_hausdorff(a, b, hint=100) - exact) < 1e-12


def test_to_csv_header(disk_sum):
    buf = io.StringIO()
    sample_line(disk_sum, 0.0, 0.02, 0.01).to_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0].startswith("re,im,")
    assert len(lines) == 6
    assert float(lines[3].split(",")[0]) == 2.0


def test_prop3_identity(disk_sum):
    v = decide_equiv(disk_sum, disk_sum)
    samples = [(0.1 * i - 0.5, 37.0 * i - 100) for i in range(10)]
    assert verify_prop3(disk_sum, disk_sum, v, samples)["max_deviation"] < 1e-12


@pytest.mark.parametrize("seed", range(5))
def test_prop3_generated(seed, gens2):
    rng = random.Random(seed)
    exps = ExponentSet.from_coords(gens2, [(1, 0), (F(1, 2), 0), (0, 1), (F(1, 3), F(2, 3))])
    f = ExponentialSum.from_polar(exps, [(1, F(rng.randrange(12), 12)) for _ in range(4)])
    b = natural_basis(exps)
    x = tuple(F(rng.randrange(100), 100) for _ in range(b.dim))
    g = generate_member(f, x, (0, 1, 0, 2))
    samples = [(rng.uniform(-1, 1), rng.uniform(-500, 500)) for _ in range(100)]
    assert verify_prop3(f, g, decide_equiv(f, g), samples)["pass"]


def test_prop3_translation(disk_sum):
    x, k = translation_parameters(natural_basis(disk_sum.exponents), 41.3)
    g = generate_member(disk_sum, tuple(F(v) for v in x), k)
    samples = [(0.0, float(t)) for t in np.linspace(-300, 300, 100)]
    assert verify_prop3(disk_sum, g, decide_equiv(disk_sum, g), samples)["pass"]


def test_prop3_needs_certificate(i_pair):
    with pytest.raises(NoCertificate):
        verify_prop3(*i_pair, decide_equiv(*i_pair), [(0.0, 0.0)])


def test_lemma1_identity_basis(disk_sum):
    nat = natural_basis(disk_sum.exponents)
    rep = verify_lemma1(disk_sum, list(nat.basis), 0.0, 50)
    assert rep["distance"] == 0 and rep["pass"]


def test_lemma1_unimodular(disk_sum, gens2):
    other = [gens2.frequency((1, 1)), gens2.frequency((1, 2))]
    rep = verify_lemma1(disk_sum, other, 0.0, 80)
    assert rep["unimodular"] and rep["pass"]


def test_lemma1_scaled_basis(gens1):
    f = ExponentialSum(ExponentSet.from_coords(gens1, [(1,), (3,)]), (1, F(1, 2)))
    rep = verify_lemma1(f, [gens1.frequency((2,))], 0.0, 200)
    assert not rep["unimodular"] and rep["pass"]


def test_grid_tolerance_formula(disk_sum):
    assert abs(grid_tolerance(disk_sum, 0.0, 200) - 3 * 2 * math.pi * 2 / 200) < 1e-15


def test_prop4_single_frequency(gens1):
    f = ExponentialSum(ExponentSet.from_coords(gens1, [(1,)]), (1,))
    rep = verify_prop4(f, 0.0, 10.0, 0.01, 100)
    assert rep["pass"] and rep["bounded"]


def test_theorem1_identity_and_refusal(disk_sum, i_pair):
    rep = verify_theorem1(disk_sum, disk_sum, -0.1, 0.1, 2, 50.0, 0.05, 0.05)
    assert rep["d_12"] == 0 and rep["d_21"] == 0 and rep["pass"]
    with pytest.raises(NotEquivalent):
        verify_theorem1(*i_pair, -0.1, 0.1, 2, 50.0, 0.05, 0.05)
    rep = compare_strip_values(*i_pair, -0.1, 0.1, 2, 50.0, 0.05)
    assert "pass" not in rep and rep["d_12"] >= 0
