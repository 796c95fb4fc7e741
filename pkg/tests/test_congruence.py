import itertools
import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bohrequiv.congruence import (
    Feasible,
    Infeasible,
    PhaseSystem,
    check_certificate,
    column_hnf,
    lattice_distance,
    row_modulus,
    solve_integer_system,
    solve_phase_system,
    xgcd,
)
from bohrequiv.errors import DimensionMismatch, ToleranceInExactMode
from oracles import brute_force_congruence


def test_identity_rows_always_feasible():
    sys_ = PhaseSystem(((1, 0), (0, 1)), (F(1, 3), F(5, 7)), (1, 1))
    cert = solve_phase_system(sys_)
    assert cert == Feasible((F(1, 3), F(5, 7)), (0, 0))


def test_multiple_rows_infeasible_witness():
    sys_ = PhaseSystem(((1,), (2,)), (F(1, 4), F(0)), (1, 1))
    cert = solve_phase_system(sys_)
    assert isinstance(cert, Infeasible)
    assert cert.u == (2, -1)
    assert check_certificate(sys_, cert)
    # no y on a 1/1000 grid comes within 1e-3 of solving both congruences
    y = np.arange(1000) / 1000

    def dist(v):
        return np.abs(v - np.round(v))
    assert np.min(np.maximum(dist(y - 0.25), dist(2 * y))) > 1e-3


def test_multiple_rows_feasible():
    sys_ = PhaseSystem(((1,), (2,)), (F(1, 2), F(0)), (1, 1))
    cert = solve_phase_system(sys_)
    assert cert == Feasible((F(1, 2),), (0, -1))
    assert check_certificate(sys_, cert)


def test_row_modulus_examples():
    assert row_modulus((1, -3)) == 1
    assert row_modulus((F(1, 2), F(1, 3))) == F(1, 6)
    assert row_modulus((0, 0)) == 1


def test_row_modulus_brute_force():
    r = (F(1, 2), F(1, 3))
    reach = {(r[0] * a + r[1] * b) % 1 for a in range(-6, 7) for b in range(-6, 7)}
    assert reach == {F(k, 6) for k in range(6)}


@settings(max_examples=200, deadline=None)
@given(st.integers(-50, 50), st.integers(-50, 50))
def test_xgcd(a, b):
    g, s, t = xgcd(a, b)
    assert s * a + t * b == g
    assert g == np.gcd(a, b)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=3))
def test_column_hnf_is_unimodular_transform(M):
    if np.linalg.matrix_rank(np.array(M, dtype=float)) < len(M):
        with pytest.raises(ValueError):
            column_hnf(M)
        return
    H, V = column_hnf(M)
    assert (np.array(M, dtype=object) @ np.array(V, dtype=object)).tolist() == H
    assert abs(round(np.linalg.det(np.array(V, dtype=float)))) == 1
    # lower triangular in echelon sense: entries right of each pivot vanish
    for i, row in enumerate(H):
        nz = [j for j, v in enumerate(row) if v != 0]
        if nz:
            assert all(H[k][nz[-1]] == 0 for k in range(i))


def _brute_integer(M, c, box=6):
    n = len(M[0])
    for k in itertools.product(range(-box, box + 1), repeat=n):
        if all(sum(a * b for a, b in zip(row, k)) == ci for row, ci in zip(M, c)):
            return True
    return False


@pytest.mark.parametrize("seed", range(60))
def test_integer_system_against_enumeration(seed):
    rng = random.Random(seed)
    rows = rng.randint(1, 2)
    M = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(rows)]
    if rng.random() < 0.5:
        k = [rng.randint(-2, 2) for _ in range(3)]
        c = [F(sum(a * b for a, b in zip(row, k))) for row in M]
    else:
        c = [F(rng.randint(-4, 4)) for _ in range(rows)]
    ok, sol = solve_integer_system(M, c)
    if ok:
        assert [sum(a * b for a, b in zip(row, sol)) for row in M] == c
    else:
        # w.M integral while w.c is not
        assert all(sum(sol[i] * M[i][j] for i in range(rows)).denominator == 1
                   for j in range(3))
        assert sum(w * ci for w, ci in zip(sol, c)).denominator != 1
        assert not _brute_integer(M, c)


def _random_system(rng, exact=True):
    n, m = rng.randint(1, 4), rng.randint(1, 3)
    A = [[F(rng.randint(-3, 3), rng.choice((1, 2, 3))) for _ in range(m)] for _ in range(n)]
    mu = [F(1, rng.choice((1, 2, 3, 6))) for _ in range(n)]
    theta = [F(rng.randrange(12), 12) for _ in range(n)]
    if not exact:
        theta = [float(t) for t in theta]
    return PhaseSystem(tuple(map(tuple, A)), tuple(theta), tuple(mu))


@pytest.mark.parametrize("seed", range(80))
def test_phase_system_certificates(seed):
    rng = random.Random(seed)
    sys_ = _random_system(rng)
    cert = solve_phase_system(sys_)
    assert check_certificate(sys_, cert)
    assert cert.feasible == brute_force_congruence(sys_.A, sys_.theta, sys_.moduli)


@pytest.mark.parametrize("seed", range(40))
def test_numeric_mode_matches_exact(seed):
    rng = random.Random(1000 + seed)
    ex = _random_system(rng)
    num = PhaseSystem(ex.A, tuple(float(t) + 1e-13 for t in ex.theta), ex.moduli)
    a, b = solve_phase_system(ex), solve_phase_system(num)
    assert a.feasible == b.feasible
    assert check_certificate(num, b, 1e-9)
    if not b.feasible:
        assert lattice_distance(b.u, num) > 1e-9


def test_tolerance_rules():
    sys_ = PhaseSystem(((1,),), (F(1, 2),), (1,))
    with pytest.raises(ToleranceInExactMode):
        solve_phase_system(sys_, 1e-9)
    with pytest.raises(DimensionMismatch):
        PhaseSystem(((1,), (1, 2)), (0, 0), (1, 1))
    with pytest.raises(DimensionMismatch):
        PhaseSystem(((1,),), (0, 0), (1,))


def test_theta_outside_unit_interval_is_fine():
    sys_ = PhaseSystem(((1,), (2,)), (F(3, 2), F(-4)), (1, 1))
    cert = solve_phase_system(sys_)
    assert cert.feasible and check_certificate(sys_, cert)
