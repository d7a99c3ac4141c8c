import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import independent_pair, leibniz_det, rand_int_vector
from ridgepath.errors import DependentDirections, NotThreeDistinctLines, PointNotOnProjection
from ridgepath.exactnum import Matrix
from ridgepath.geometry import (
    Case,
    Line,
    Line2D,
    check_distinct,
    classify_three_lines,
    complete_to_basis,
    inverse_transform_point,
    lift_path,
    project_line,
    transform_line,
    transform_point,
)
from ridgepath.paths import check_path


def test_complete_identity_2d():
    rm = complete_to_basis((1, 0), (0, 1))
    assert rm.s == Matrix.identity(2)


def test_complete_identity_3d_picks_e3():
    rm = complete_to_basis((1, 0, 0), (0, 1, 0))
    assert rm.s == Matrix.identity(3)


def test_complete_skewed_pair():
    rm = complete_to_basis((1, 1, 0), (0, 1, 1))
    assert rm.s == Matrix.from_rows([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert leibniz_det(rm.s.tolist()) == 1
    # inverse worked out by hand
    assert rm.s_inverse == Matrix.from_rows([[1, -1, 1], [0, 1, -1], [0, 0, 1]])
    assert rm.s @ rm.s_inverse == Matrix.identity(3)


def test_complete_rejects_parallel_directions():
    with pytest.raises(DependentDirections):
        complete_to_basis((1, 2, 3), (-2, -4, -6))


def test_transform_point_examples():
    assert transform_point(complete_to_basis((1, 0), (0, 1)), (5, 7)) == (5, 7)
    rm = complete_to_basis((1, 1), (0, 1))
    assert transform_point(rm, (1, 2)) == (3, 2)
    assert inverse_transform_point(rm, (3, 2)) == (1, 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_round_trip(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    rm = complete_to_basis(*independent_pair(rng, n))
    x = rand_int_vector(rng, n, -9, 9)
    assert inverse_transform_point(rm, transform_point(rm, x)) == x


def test_project_line_examples():
    assert project_line(Line((0, 0, 0), (0, 0, 1))) == (0, 0)
    img = project_line(Line((1, 2, 3), (1, 1, 0)))
    assert img == Line2D(1, -1, -1)
    assert img.contains((1, 2)) and img.contains((2, 3))
    assert project_line(Line((0, 1), (1, 2))) == Line2D.from_slope(2, 1)


def test_line2d_canonical_scaling():
    assert Line2D(2, 4, 6) == Line2D(1, 2, 3)
    assert Line2D(0, -3, 6) == Line2D.horizontal(-2)
    assert Line2D(-5, 0, 5) == Line2D.vertical(-1)


def test_classify_concurrent():
    c = classify_three_lines(*(Line2D.from_slope(s, 0) for s in (1, 2, 3)))
    assert c.case is Case.CASE3
    assert c.intersection == (0, 0)


def test_classify_parallel():
    c = classify_three_lines(*(Line2D.from_slope(1, b) for b in (0, 1, 2)))
    assert c.case is Case.CASE2


def test_classify_generic():
    c = classify_three_lines(Line2D.from_slope(1, 0), Line2D.from_slope(2, 1), Line2D.from_slope(3, 3))
    # pairwise meets (-1,-1) and (-3/2,-3/2) differ
    assert Line2D.from_slope(1, 0).intersection(Line2D.from_slope(2, 1)) == (-1, -1)
    assert Line2D.from_slope(1, 0).intersection(Line2D.from_slope(3, 3)) == (F(-3, 2), F(-3, 2))
    assert c.case is Case.CASE4


def test_classify_degenerate_and_axis_cases():
    assert classify_three_lines((0, 0), Line2D(1, 1, 0), Line2D(1, 2, 0)).case is Case.DEGENERATE_POINT
    same = Line2D(1, -1, 0)
    assert classify_three_lines(same, Line2D(2, -2, 0), Line2D(1, 2, 0)).case is Case.DEGENERATE_COINCIDE
    assert classify_three_lines(Line2D.horizontal(0), Line2D(1, -1, 0), Line2D(1, -2, 1)).case is Case.CASE1


def _random_planar(rng):
    kind = rng.random()
    if kind < 0.1:
        return (F(rng.randint(-2, 2)), F(rng.randint(-2, 2)))
    a, b = rng.randint(-2, 2), rng.randint(-2, 2)
    if a == b == 0:
        a = 1
    return Line2D(a, b, rng.randint(-2, 2))


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**9))
def test_classification_is_total_and_exclusive(seed):
    rng = random.Random(seed)
    ps = [_random_planar(rng) for _ in range(3)]
    c = classify_three_lines(*ps)
    lines = [p for p in ps if isinstance(p, Line2D)]
    fired = {
        Case.DEGENERATE_POINT: len(lines) < 3,
        Case.DEGENERATE_COINCIDE: len(lines) == 3 and len(set(lines)) < 3,
    }
    if len(lines) == 3 and len(set(lines)) == 3:
        axis = any(p.axis_parallel for p in lines)
        allpar = lines[0].parallel_to(lines[1]) and lines[1].parallel_to(lines[2])
        o = lines[0].intersection(lines[1])
        conc = o is not None and lines[2].contains(o)
        fired[Case.CASE1] = axis
        fired[Case.CASE2] = not axis and allpar
        fired[Case.CASE3] = not axis and conc
        fired[Case.CASE4] = not axis and not allpar and not conc
    # the first condition to hold in the fixed order is the verdict
    order = [Case.DEGENERATE_POINT, Case.DEGENERATE_COINCIDE, Case.CASE1, Case.CASE2, Case.CASE3, Case.CASE4]
    first = next(k for k in order if fired.get(k))
    assert c.case is first
    if c.case in (Case.CASE2, Case.CASE3, Case.CASE4):
        assert sum(bool(fired.get(k)) for k in (Case.CASE2, Case.CASE3, Case.CASE4)) == 1


def test_check_distinct():
    check_distinct([Line((0, 0), (1, 1)), Line((0, 1), (1, 1))])
    with pytest.raises(NotThreeDistinctLines):
        check_distinct([Line((0, 0), (1, 1)), Line((2, 2), (-3, -3))])


def test_lift_identity_in_plane():
    rm = complete_to_basis((1, 0), (0, 1))
    lines = [Line((0, 0), (1, 1)), Line((0, 1), (1, 2)), Line((0, 3), (1, 3))]
    pts = [(F(-6, 5), F(-6, 5)), (F(-6, 5), F(-7, 5))]
    lifted = lift_path(pts, (0, 1), lines, rm)
    assert lifted.points == tuple(pts)
    assert not lifted.collapsed


def test_lift_solves_parameter():
    rm = complete_to_basis((1, 0, 0), (0, 1, 0))
    lifted = lift_path([(2, 2)], (0,), [Line((0, 0, 5), (1, 1, 0))], rm)
    assert lifted.points == ((2, 2, 5),)


def test_lift_point_projection_gives_pair():
    rm = complete_to_basis((1, 0, 0), (0, 1, 0))
    ln = Line((0, 0, 0), (0, 0, 1))
    lifted = lift_path([(0, 0)], (0,), [ln], rm)
    assert lifted.collapsed
    assert lifted.points == ((0, 0, 0), (0, 0, 1))


def test_lift_two_preimages_collapse():
    # both lines pass over (1, 1) in the plane but at different heights
    rm = complete_to_basis((1, 0, 0), (0, 1, 0))
    lines = [Line((0, 0, 0), (1, 1, 0)), Line((0, 2, 7), (1, -1, 0))]
    lifted = lift_path([(1, 1)], (0,), lines, rm)
    assert lifted.collapsed
    assert lifted.points == ((1, 1, 0), (1, 1, 7))


def test_lift_rejects_foreign_point():
    rm = complete_to_basis((1, 0), (0, 1))
    with pytest.raises(PointNotOnProjection):
        lift_path([(1, 5)], (0,), [Line((0, 0), (1, 1))], rm)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_project_then_lift_is_identity(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    a1, a2 = independent_pair(rng, n)
    rm = complete_to_basis(a1, a2)
    ln = Line(rand_int_vector(rng, n), rand_int_vector(rng, n, nonzero=True))
    img = project_line(transform_line(rm, ln))
    if not isinstance(img, Line2D):
        return
    t = F(rng.randint(-5, 5), rng.randint(1, 4))
    y = transform_point(rm, ln.at(t))[:2]
    assert img.contains(y)
    lifted = lift_path([y], (0,), [ln], rm)
    assert lifted.points == (ln.at(t),)
    assert project_line(transform_line(rm, Line(lifted.points[0], ln.dir))) == img


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_path_transport(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    a1, a2 = independent_pair(rng, n)
    rm = complete_to_basis(a1, a2)
    # axis-aligned staircase in transformed coordinates, random tail coordinates
    y = list(rand_int_vector(rng, n))
    ys = [tuple(y)]
    for step in range(rng.randint(1, 6)):
        y = list(y)
        y[1 - step % 2] += rng.choice([-2, -1, 1, 2])
        y[2:] = rand_int_vector(rng, n - 2)
        ys.append(tuple(F(v) for v in y))
    xs = [inverse_transform_point(rm, v) for v in ys]
    e1 = tuple(F(int(i == 0)) for i in range(n))
    e2 = tuple(F(int(i == 1)) for i in range(n))
    assert check_path(ys, e1, e2) == 0
    assert check_path(xs, a1, a2) == 0
    assert [transform_point(rm, x) for x in xs] == ys
