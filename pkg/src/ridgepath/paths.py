"""Paths and closed paths with respect to two directions.

A path is a sequence of points whose consecutive differences are
orthogonal alternately to ``a1`` and ``a2``; equivalently, consecutive
points alternately share their ``a1``-level and their ``a2``-level.
A closed path has even length and the wrap-around step continues the
alternation.  Closed paths inside a set are exactly the obstructions to
representing arbitrary functions on that set by ``g1(a1.x) + g2(a2.x)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import geometry as geo
from .errors import DegenerateStep, DimensionMismatch, NotThreeDistinctLines
from .exactnum import Matrix, as_vector, determinant, dot, solve_linear
from .geometry import Case, Line, Line2D

E1 = (Fraction(1), Fraction(0))
E2 = (Fraction(0), Fraction(1))


@dataclass(frozen=True)
class ClosedPath:
    """Validated closed path.

    ``start_axis`` is 0 when the first step keeps the ``a1``-level fixed and
    1 when it keeps the ``a2``-level fixed.
    """

    points: tuple
    a1: tuple
    a2: tuple
    start_axis: int

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class ThreeLineWitness:
    closed_path: ClosedPath
    case: Case
    line_assignment: tuple
    trace: tuple = field(default=(), compare=False)

    @property
    def points(self) -> tuple:
        return self.closed_path.points


def _levels(points, a):
    return [dot(a, p) for p in points]


def check_path(points: Sequence, a1, a2) -> int | None:
    """Return the alternation parity if ``points`` is a path, else None.

    Parity 0 is tried first, so a two-point sequence whose difference is
    orthogonal to both directions reports 0.
    """
    pts = [as_vector(p) for p in points]
    if len(pts) < 2:
        return None
    a1, a2 = as_vector(a1), as_vector(a2)
    if any(len(p) != len(a1) for p in pts) or len(a1) != len(a2):
        raise DimensionMismatch("points and directions must share a dimension")
    if any(pts[i] == pts[i + 1] for i in range(len(pts) - 1)):
        return None
    lv = (_levels(pts, a1), _levels(pts, a2))
    for parity in (0, 1):
        if all(lv[(parity + i) % 2][i] == lv[(parity + i) % 2][i + 1] for i in range(len(pts) - 1)):
            return parity
    return None


def check_closed_path(points: Sequence, a1, a2) -> bool:
    pts = list(points)
    if len(pts) < 2 or len(pts) % 2:
        return False
    return check_path(pts + [pts[0]], a1, a2) is not None


def closed_path(points: Sequence, a1, a2) -> ClosedPath:
    """Wrap already-ordered points as a :class:`ClosedPath`, validating them."""
    pts = tuple(as_vector(p) for p in points)
    if not check_closed_path(pts, a1, a2):
        raise ValueError("points do not form a closed path")
    parity = check_path(pts + pts[:1], a1, a2)
    return ClosedPath(pts, as_vector(a1), as_vector(a2), parity)


# -- finite sets ------------------------------------------------------------


class _DSU:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        return True


def level_graph_edges(points: Sequence, a1, a2) -> list[tuple]:
    """Each point as an edge between its a1-level vertex and a2-level vertex."""
    return [((0, dot(a1, p)), (1, dot(a2, p))) for p in points]


def bfs_edge_path(adj, src, dst):
    """Edge indices along a shortest path from ``src`` to ``dst``, or None.

    ``adj`` maps a vertex to ``(neighbour, edge index)`` pairs.
    """
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for v, e in adj.get(u, ()):
            if v not in prev:
                prev[v] = (u, e)
                queue.append(v)
    if dst not in prev:
        return None
    out = []
    node = dst
    while prev[node] is not None:
        node, e = prev[node]
        out.append(e)
    return out[::-1]


def find_cycle_edges(edges: Sequence[tuple], active: Sequence[int] | None = None) -> list[int] | None:
    """Edge indices of some cycle in the multigraph, listed in cycle order.

    Scans edges in order with union-find; the first edge joining two
    already-connected vertices closes a cycle with the spanning-forest path
    between them.
    """
    ids = range(len(edges)) if active is None else active
    dsu = _DSU()
    adj: dict = {}
    for e in ids:
        u, v = edges[e]
        if not dsu.union(u, v):
            path = bfs_edge_path(adj, v, u)
            return [e] + path
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    return None


def find_closed_path_finite(points: Sequence, a1, a2) -> ClosedPath | None:
    """A closed path contained in a finite set, or None if there is none.

    The points are edges of a bipartite multigraph on distinct a1-levels and
    a2-levels; the set contains a closed path iff that graph has a cycle.
    """
    pts = [as_vector(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    a1, a2 = as_vector(a1), as_vector(a2)
    edges = level_graph_edges(pts, a1, a2)
    cyc = find_cycle_edges(edges)
    if cyc is None:
        return None
    return closed_path([pts[e] for e in cyc], a1, a2)


# -- three lines in the plane ---------------------------------------------------


def _witness(points, assignment, case, lines2d=None, trace=()) -> ThreeLineWitness:
    cp = closed_path(points, E1, E2)
    if lines2d is not None:
        for p, i in zip(cp.points, assignment):
            assert lines2d[i].contains(p), f"vertex {p} is not on line {i}"
    return ThreeLineWitness(cp, case, tuple(assignment), tuple(trace))


def witness_case1(lines: Sequence[Line2D]) -> ThreeLineWitness:
    """Axis-parallel rectangle when some line is parallel to an axis."""
    lines = list(lines)
    hs = [i for i, ln in enumerate(lines) if ln.is_horizontal]
    vs = [i for i, ln in enumerate(lines) if ln.is_vertical]

    if len(hs) >= 2:
        i, j = hs[:2]
        k1, k2 = lines[i].gamma, lines[j].gamma
        pts = [(0, k1), (0, k2), (1, k2), (1, k1)]
        return _witness(pts, (i, j, j, i), Case.CASE1, lines)
    if len(vs) >= 2:
        i, j = vs[:2]
        h1, h2 = lines[i].gamma, lines[j].gamma
        pts = [(h1, 0), (h2, 0), (h2, 1), (h1, 1)]
        return _witness(pts, (i, j, j, i), Case.CASE1, lines)

    if hs and vs:
        ih, iv = hs[0], vs[0]
        (o,) = [i for i in range(3) if i not in (ih, iv)]
        k, h = lines[ih].gamma, lines[iv].gamma
        # third line is oblique; pick an abscissa whose point avoids column h and row k
        oblique = lines[o]
        t = Fraction(0)
        while t == h or oblique.y_at(t) == k:
            t += 1
        q = (t, oblique.y_at(t))
        pts = [q, (q[0], k), (h, k), (h, q[1])]
        return _witness(pts, (o, ih, ih, iv), Case.CASE1, lines)

    if hs:
        (il,) = hs
        l2, l3 = [i for i in range(3) if i != il]
        k = lines[il].gamma
        w = k + 1
        while lines[l2].x_at(w) == lines[l3].x_at(w):
            w += 1
        s, s2 = lines[l2].x_at(w), lines[l3].x_at(w)
        pts = [(s, w), (s, k), (s2, k), (s2, w)]
        return _witness(pts, (l2, il, il, l3), Case.CASE1, lines)

    (il,) = vs
    l2, l3 = [i for i in range(3) if i != il]
    h = lines[il].gamma
    w = h + 1
    while lines[l2].y_at(w) == lines[l3].y_at(w):
        w += 1
    s, s2 = lines[l2].y_at(w), lines[l3].y_at(w)
    pts = [(w, s), (w, s2), (h, s2), (h, s)]
    # (w, s) -> (w, s2) keeps x; (w, s2) -> (h, s2) keeps y
    return _witness(pts, (l2, l3, il, il), Case.CASE1, lines)


def _parallel_data(lines: Sequence[Line2D]):
    """Common direction ``b = (1, slope)`` and base points ``(0, intercept)``."""
    slope = lines[0].slope
    b = (Fraction(1), slope)
    cs = [(Fraction(0), ln.intercept) for ln in lines]
    return b, cs


def case2_system(lines: Sequence[Line2D]):
    """Coefficient matrix and right-hand side of the six-point closure system.

    Unknowns are ``t1..t6`` with ``x_k = t_k b + c_(k mod 3)``; consecutive
    points share alternately their first and second coordinate.
    """
    b, cs = _parallel_data(lines)
    rows, rhs = [], []
    for k in range(6):
        axis = k % 2
        ck, cn = cs[k % 3], cs[(k + 1) % 3]
        row = [Fraction(0)] * 6
        row[k] += b[axis]
        row[(k + 1) % 6] -= b[axis]
        rows.append(row)
        rhs.append(cn[axis] - ck[axis])
    return Matrix.from_rows(rows), tuple(rhs), b, cs


def witness_case2_system(lines: Sequence[Line2D]) -> ThreeLineWitness:
    """Six-point closed path on three parallel lines via the closure system.

    The solution set is a line in t-space (every t_k shifted by the same
    amount); the representative with ``t1 = 0`` is returned.
    """
    b, cs = _parallel_data(lines)
    ts = case2_parameters(lines)
    pts = [(ts[i] * b[0] + cs[i % 3][0], ts[i] * b[1] + cs[i % 3][1]) for i in range(6)]
    return _witness(pts, (0, 1, 2, 0, 1, 2), Case.CASE2, lines)


def case2_parameters(lines: Sequence[Line2D]) -> tuple:
    """``t1..t6`` of the normalized (t1 = 0) closure-system solution."""
    a, rhs, _, _ = case2_system(lines)
    sol = solve_linear(a, rhs)
    assert sol.kind == "parametric" and len(sol.kernel) == 1, sol.kind
    (k,) = sol.kernel
    return sol.at((-sol.particular[0] / k[0],))


def _greedy_walk(lines, start):
    pts = [tuple(start)]
    order = (1, 2, 0, 1, 2, 0)
    for step, target in enumerate(order):
        x, y = pts[-1]
        ln = lines[target]
        nxt = (x, ln.y_at(x)) if step % 2 == 0 else (ln.x_at(y), y)
        if nxt == pts[-1]:
            raise DegenerateStep(f"step {step + 1} from {pts[-1]} does not move")
        pts.append(nxt)
    return pts


def witness_case2_greedy(lines: Sequence[Line2D], start) -> ThreeLineWitness:
    """Walk A, B, ..., F, A' with alternating vertical and horizontal steps.

    The walk visits the lines cyclically and always returns to its start.
    """
    start = as_vector(start)
    if not lines[0].contains(start):
        raise ValueError("start point must lie on the first line")
    try:
        pts = _greedy_walk(lines, start)
    except DegenerateStep:
        b, _ = _parallel_data(lines)
        pts = _greedy_walk(lines, (start[0] + b[0], start[1] + b[1]))
    if pts[6] != pts[0]:
        raise AssertionError(f"greedy walk failed to close: {pts[0]} != {pts[6]}")
    return _witness(pts[:6], (0, 1, 2, 0, 1, 2), Case.CASE2, lines)


def witness_case3(p, q, r, intersection=(0, 0)) -> ThreeLineWitness:
    """Six-point closed path on three concurrent lines with slopes p, q, r.

    Lines are indexed 0, 1, 2 for slopes p, q, r through ``intersection``.
    """
    p, q, r = (Fraction(v) for v in (p, q, r))
    if len({p, q, r}) != 3 or 0 in (p, q, r):
        raise ValueError("slopes must be distinct and nonzero")
    o = as_vector(intersection)
    base = [(p, p * q), (p, p * r), (r, p * r), (r, q * r), (q, q * r), (q, p * q)]
    pts = [(x + o[0], y + o[1]) for x, y in base]
    lines = [Line2D.from_slope(s, o[1] - s * o[0]) for s in (p, q, r)]
    return _witness(pts, (1, 2, 0, 1, 2, 0), Case.CASE3, lines)


# (main line, line through (u1, v2), line through (v1, u2)) for each variant,
# in the order the determinants ce-a^2, ae-c^2, ac-e^2 are tried
CASE4_VARIANTS = ((0, 1, 2), (1, 0, 2), (2, 0, 1))


def case4_system(slopes, intercepts, variant: int):
    """4x4 system for ``(u1, u2, v1, v2)`` of the given variant."""
    m, i1, i2 = CASE4_VARIANTS[variant]
    sm, s1, s2 = slopes[m], slopes[i1], slopes[i2]
    rows = [
        (-sm, 1, 0, 0),
        (0, 0, -sm, 1),
        (-s1, 0, 0, 1),
        (0, 1, -s2, 0),
    ]
    rhs = (intercepts[m], intercepts[m], intercepts[i1], intercepts[i2])
    return Matrix.from_rows(rows), rhs


def case4_determinants(a, c, e) -> tuple:
    return (c * e - a * a, a * e - c * c, a * c - e * e)


def witness_case4(a, b, c, d, e, f) -> ThreeLineWitness:
    """Four-point rectangle on ``x2 = a x1 + b``, ``c x1 + d``, ``e x1 + f``.

    Two opposite corners lie on one line and the remaining corners on the
    other two; the first variant with a nonzero determinant is used.
    """
    a, b, c, d, e, f = (Fraction(v) for v in (a, b, c, d, e, f))
    slopes, intercepts = (a, c, e), (b, d, f)
    dets = case4_determinants(a, c, e)
    variant = next((i for i, dv in enumerate(dets) if dv != 0), None)
    if variant is None:
        raise AssertionError("all determinants vanish: the lines are parallel")
    mat, rhs = case4_system(slopes, intercepts, variant)
    # the closed form agrees with elimination up to sign
    assert abs(determinant(mat)) == abs(dets[variant])
    sol = solve_linear(mat, rhs)
    assert sol.kind == "unique"
    u1, u2, v1, v2 = sol.particular
    if u1 == v1 or u2 == v2:
        raise AssertionError("degenerate rectangle: the lines are concurrent")
    m, i1, i2 = CASE4_VARIANTS[variant]
    pts = [(u1, u2), (u1, v2), (v1, v2), (v1, u2)]
    lines = [Line2D.from_slope(s, t) for s, t in zip(slopes, intercepts)]
    trace = (f"determinants ce-a^2, ae-c^2, ac-e^2 = {', '.join(str(x) for x in dets)}; using variant {variant + 1}",)
    return _witness(pts, (m, i1, m, i2), Case.CASE4, lines, trace)


# -- full pipeline ------------------------------------------------------------


def _fmt(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def planar_witness(proj: Sequence[Line2D], cls: geo.Classification) -> ThreeLineWitness:
    """Dispatch a classified triple of planar lines to its constructor."""
    if cls.case is Case.CASE1:
        return witness_case1(proj)
    if cls.case is Case.CASE2:
        return witness_case2_system(proj)
    if cls.case is Case.CASE3:
        o = cls.intersection
        return witness_case3(proj[0].slope, proj[1].slope, proj[2].slope, o)
    if cls.case is Case.CASE4:
        return witness_case4(
            proj[0].slope, proj[0].intercept,
            proj[1].slope, proj[1].intercept,
            proj[2].slope, proj[2].intercept,
        )
    raise ValueError(f"no planar constructor for {cls.case.value}")


def three_line_witness(lines: Sequence[Line], a1, a2) -> ThreeLineWitness:
    """Closed path with respect to ``a1, a2`` inside the union of three lines.

    Completes the directions to a basis, projects the transformed lines to
    the first two coordinates, handles degenerate images directly, builds a
    planar witness for the remaining cases and lifts it back.  The result is
    re-checked against the original directions before returning.
    """
    lines = [ln if isinstance(ln, Line) else Line(*ln) for ln in lines]
    if len(lines) != 3:
        raise NotThreeDistinctLines(f"expected 3 lines, got {len(lines)}")
    a1, a2 = geo.direction(a1), geo.direction(a2)
    if any(ln.dim != len(a1) for ln in lines):
        raise DimensionMismatch("lines and directions must share a dimension")
    geo.check_distinct(lines)
    rmap = geo.complete_to_basis(a1, a2)
    trace = [f"basis completion S = {rmap.s}"]
    proj = [geo.project_line(geo.transform_line(rmap, ln)) for ln in lines]
    trace.append("projections: " + "; ".join(str(p) if isinstance(p, Line2D) else "point " + _fmt(p) for p in proj))
    cls = geo.classify_three_lines(*proj)
    trace.append(f"classification: {cls.case.value}")

    if cls.case is Case.DEGENERATE_POINT:
        (i,) = cls.culprits
        pts, assignment = (lines[i].at(0), lines[i].at(1)), (i, i)
    elif cls.case is Case.DEGENERATE_COINCIDE:
        i, j = cls.culprits
        tj = geo.transform_line(rmap, lines[j])
        for t in (0, 1):
            z = lines[i].at(t)
            y = geo.transform_point(rmap, z)
            s = geo._preimage(tj, y[:2])
            zj = lines[j].at(s)
            if zj != z:
                break
        pts, assignment = (z, zj), (i, j)
    else:
        planar = planar_witness(proj, cls)
        trace.extend(planar.trace)
        trace.append("planar witness: " + " ".join(_fmt(p) for p in planar.points))
        lifted = geo.lift_path(planar.points, planar.line_assignment, lines, rmap)
        pts, assignment = lifted.points, lifted.assignment
        if lifted.collapsed:
            trace.append("lifting found two preimages of one vertex")
            cls = geo.Classification(Case.DEGENERATE_PREIMAGE)

    for p, i in zip(pts, assignment):
        assert lines[i].contains(p), f"vertex {p} is not on line {i}"
    cp = closed_path(pts, a1, a2)
    trace.append(f"closed path check with original directions: accepted ({len(pts)} points)")
    return ThreeLineWitness(cp, cls.case, tuple(assignment), tuple(trace))
