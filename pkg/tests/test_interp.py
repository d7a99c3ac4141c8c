import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import has_cycle_brute, independent_pair, rand_int_vector, rand_rational
from ridgepath.cycles import Cycle, certify, contains_cycle
from ridgepath.errors import DimensionMismatch, DuplicatePoint, MissingLevel
from ridgepath.exactnum import dot, solve_linear
from ridgepath.geometry import Line
from ridgepath.interp import (
    InterpolationProblem,
    RidgeAssignment,
    interpolable_for_all_data,
    obstruction_certificate,
    obstruction_pairing,
    solve_interpolation,
    verify_representation,
)
from ridgepath.cycles import build_incidence
from ridgepath.paths import three_line_witness

E1, E2 = (1, 0), (0, 1)
AXES3 = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
FIVE = [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]
RECT = [(0, 0), (0, 1), (1, 1), (1, 0)]
STAIR = [(0, 0), (0, 1), (1, 1)]


def ridge_data(rng, points, directions):
    """Values of a random ridge sum, with each g_i drawn per level."""
    gs = [{} for _ in directions]
    out = []
    for p in points:
        total = F(0)
        for g, a in zip(gs, directions):
            level = dot(a, p)
            if level not in g:
                g[level] = rand_rational(rng, 9)
            total += g[level]
        out.append(total)
    return out


def test_staircase_interpolable():
    feas = interpolable_for_all_data(STAIR, [E1, E2])
    assert feas and feas.certificate is None


def test_rectangle_not_interpolable():
    feas = interpolable_for_all_data(RECT, [E1, E2])
    assert not feas
    lam = feas.certificate.lam
    assert all(abs(x) == abs(lam[0]) for x in lam)
    assert [x / lam[0] for x in lam] == [1, -1, 1, -1]


def test_five_point_certificate():
    feas = interpolable_for_all_data(FIVE, AXES3)
    assert not feas
    assert feas.certificate.normalized() == (-2, 1, 1, 1, -1)


def test_rectangle_zero_data_solves_to_zero():
    a = solve_interpolation(InterpolationProblem(RECT, [E1, E2], (0, 0, 0, 0)))
    assert a is not None
    assert all(v == 0 for g in a.values for v in g.values())


def test_rectangle_unit_data_is_obstructed():
    prob = InterpolationProblem(RECT, [E1, E2], (1, 0, 0, 0))
    assert solve_interpolation(prob) is None
    m, _ = build_incidence(RECT, [E1, E2])
    assert not solve_linear(m.transpose(), prob.data).consistent
    pairing = obstruction_pairing(Cycle(RECT, (1, -1, 1, -1)), prob.data)
    assert pairing == 1
    cert = obstruction_certificate(prob)
    assert abs(obstruction_pairing(cert, [prob.data[j] for j in cert.indices])) == 1


def test_staircase_random_data():
    rng = random.Random(5)
    for _ in range(20):
        data = [rand_rational(rng) for _ in STAIR]
        prob = InterpolationProblem(STAIR, [E1, E2], data)
        a = solve_interpolation(prob)
        assert a is not None and verify_representation(a, prob)


def test_verify_detects_perturbation():
    prob = InterpolationProblem(STAIR, [E1, E2], (3, F(-7, 5), F(11, 2)))
    a = solve_interpolation(prob)
    assert verify_representation(a, prob)
    g0 = dict(a.values[0])
    g0[next(iter(g0))] += 1
    assert not verify_representation(RidgeAssignment((g0, a.values[1])), prob)


def test_zero_assignment_on_zero_data():
    prob = InterpolationProblem(STAIR, [E1, E2], (0, 0, 0))
    zero = RidgeAssignment(({F(0): F(0), F(1): F(0)}, {F(0): F(0), F(1): F(0)}))
    assert verify_representation(zero, prob)


def test_missing_level():
    prob = InterpolationProblem(STAIR, [E1, E2], (0, 0, 0))
    with pytest.raises(MissingLevel):
        verify_representation(RidgeAssignment(({F(0): F(0)}, {F(0): F(0)})), prob)


def test_pairing_zero_data():
    assert obstruction_pairing(Cycle(RECT, (1, -1, 1, -1)), (0, 0, 0, 0)) == 0
    with pytest.raises(DimensionMismatch):
        obstruction_pairing(Cycle(RECT, (1, -1, 1, -1)), (0, 0))


def test_problem_validation():
    with pytest.raises(DuplicatePoint):
        InterpolationProblem([(0, 0), (0, 0)], [E1], (1, 2))
    with pytest.raises(DimensionMismatch):
        InterpolationProblem(RECT, [E1, E2], (1, 2))
    with pytest.raises(ValueError):
        InterpolationProblem(RECT, [], (1, 2, 3, 4))


def _random_instance(rng):
    n, r = rng.randint(2, 3), rng.choice([2, 3])
    dirs = list(independent_pair(rng, n, -2, 2))
    if r == 3:
        dirs.append(rand_int_vector(rng, n, -2, 2, nonzero=True))
    pts = list({rand_int_vector(rng, n, -3, 3) for _ in range(rng.randint(1, 8))})
    return pts, dirs


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9))
def test_duality(seed):
    rng = random.Random(seed)
    pts, dirs = _random_instance(rng)
    feas = interpolable_for_all_data(pts, dirs)
    assert bool(feas) == (contains_cycle(pts, dirs) is None)
    if not feas:
        assert certify(feas.certificate, dirs)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_soundness(seed):
    rng = random.Random(seed)
    pts, dirs = _random_instance(rng)
    data = [F(rng.randint(-3, 3)) for _ in pts]
    prob = InterpolationProblem(pts, dirs, data)
    a = solve_interpolation(prob)
    if a is not None:
        assert verify_representation(a, prob)
        assert obstruction_certificate(prob) is None
    else:
        cert = obstruction_certificate(prob)
        assert certify(cert, dirs)
        assert obstruction_pairing(cert, [data[j] for j in cert.indices]) != 0


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_completeness(seed):
    rng = random.Random(seed)
    pts, dirs = _random_instance(rng)
    if not interpolable_for_all_data(pts, dirs):
        return
    assert not has_cycle_brute(pts, dirs)
    for _ in range(100):
        prob = InterpolationProblem(pts, dirs, [rand_rational(rng) for _ in pts])
        a = solve_interpolation(prob)
        assert a is not None and verify_representation(a, prob)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_annihilation(seed):
    rng = random.Random(seed)
    pts, dirs = _random_instance(rng)
    c = contains_cycle(pts, dirs)
    if c is None:
        return
    data = ridge_data(rng, c.points, dirs)
    assert obstruction_pairing(c, data) == 0
    # ridge data is always solvable
    full = ridge_data(rng, pts, dirs)
    assert solve_interpolation(InterpolationProblem(pts, dirs, full)) is not None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_three_line_obstruction(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    a1, a2 = independent_pair(rng, n, -2, 2)
    lines = []
    while len(lines) < 3:
        ln = Line(rand_int_vector(rng, n, -2, 2), rand_int_vector(rng, n, -2, 2, nonzero=True))
        if not any(ln.same_set(o) for o in lines):
            lines.append(ln)
    w = three_line_witness(lines, a1, a2)
    feas = interpolable_for_all_data(w.points, [a1, a2])
    assert not feas
    data = [F(1)] + [F(0)] * (len(w.points) - 1)
    cert = feas.certificate
    assert obstruction_pairing(cert, [data[j] for j in cert.indices]) != 0
