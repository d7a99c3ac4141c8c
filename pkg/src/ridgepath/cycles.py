"""Cycles with respect to any number of directions.

A finite set ``x^1..x^k`` is a cycle for directions ``a^1..a^r`` when some
weights ``lambda_j``, all nonzero, cancel on every level set: for each
direction ``i`` and each value ``gamma`` of ``a^i . x``, the weights of the
points on that level sum to zero.  Stacking those level equations gives a
0/1 incidence matrix, so cycles are read off its kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DuplicatePoint, InvalidCycle, NotTwoDirections
from .exactnum import Matrix, as_vector, dot, max_support_nullvector, full_support_nullvector
from .geometry import direction
from .paths import ClosedPath, bfs_edge_path, closed_path, find_cycle_edges, level_graph_edges


@dataclass(frozen=True)
class LevelIndex:
    """Per direction, the ascending levels and the points sitting on each.

    ``levels[i]`` is a tuple of ``(gamma, point_indices)`` pairs.
    """

    levels: tuple

    def rows(self):
        """``(direction index, gamma, point indices)`` in matrix row order."""
        for i, per_dir in enumerate(self.levels):
            for gamma, members in per_dir:
                yield i, gamma, members

    def values(self, i: int) -> tuple:
        return tuple(g for g, _ in self.levels[i])


@dataclass(frozen=True)
class Cycle:
    points: tuple
    lam: tuple
    # positions of ``points`` in the set the cycle was extracted from
    indices: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(as_vector(x) for x in self.points))
        object.__setattr__(self, "lam", as_vector(self.lam))
        if len(self.points) != len(self.lam):
            raise InvalidCycle("points and coefficients differ in length")
        if not self.indices:
            object.__setattr__(self, "indices", tuple(range(len(self.points))))

    def __len__(self):
        return len(self.points)

    def normalized(self, first=-2):
        """Coefficients rescaled so that the first one equals ``first``."""
        c = Fraction(first) / self.lam[0]
        return tuple(c * x for x in self.lam)


def _prepare(points, directions):
    pts = tuple(as_vector(p) for p in points)
    dirs = tuple(direction(a) for a in directions)
    seen = {}
    for j, p in enumerate(pts):
        if p in seen:
            raise DuplicatePoint(f"points {seen[p]} and {j} coincide: {p}")
        seen[p] = j
    return pts, dirs


def build_incidence(points: Sequence, directions: Sequence) -> tuple[Matrix, LevelIndex]:
    """Incidence matrix of (direction, level) rows against point columns."""
    pts, dirs = _prepare(points, directions)
    levels = []
    rows = []
    for a in dirs:
        groups: dict = {}
        for j, p in enumerate(pts):
            groups.setdefault(dot(a, p), []).append(j)
        per_dir = tuple((g, tuple(groups[g])) for g in sorted(groups))
        levels.append(per_dir)
        for _, members in per_dir:
            ms = set(members)
            rows.append([int(j in ms) for j in range(len(pts))])
    return Matrix.from_rows(rows, ncols=len(pts)), LevelIndex(tuple(levels))


def certify(cycle: Cycle, directions: Sequence) -> bool:
    """Exact check that ``cycle`` satisfies every level equation."""
    if any(x == 0 for x in cycle.lam) or not cycle.points:
        return False
    m, _ = build_incidence(cycle.points, directions)
    return all(x == 0 for x in m.apply(cycle.lam))


def contains_cycle(points: Sequence, directions: Sequence) -> Cycle | None:
    """Some cycle inside ``points``, or None when the set holds no cycle.

    Uses the kernel vector of maximal support; restricting it to its
    support keeps every level sum at zero, so the support is a cycle.
    """
    pts, dirs = _prepare(points, directions)
    if not pts:
        return None
    m, _ = build_incidence(pts, dirs)
    v = max_support_nullvector(m)
    if v is None:
        return None
    idx = tuple(j for j, x in enumerate(v) if x != 0)
    return Cycle(tuple(pts[j] for j in idx), tuple(v[j] for j in idx), idx)


def is_cycle(points: Sequence, directions: Sequence) -> tuple | None:
    """Full-support coefficients making the whole set a cycle, or None."""
    pts, dirs = _prepare(points, directions)
    if not pts:
        return None
    m, _ = build_incidence(pts, dirs)
    return full_support_nullvector(m)


def extract_inclusion_minimal_cycle(cycle: Cycle, directions: Sequence) -> Cycle:
    """Shrink a cycle until no proper subset of it is a cycle.

    Points are tried in order; when the remainder without a point still
    contains a cycle, the search restarts on that cycle's support.
    """
    if not certify(cycle, directions):
        raise InvalidCycle("input is not a cycle for these directions")
    pts, lam, idx = list(cycle.points), list(cycle.lam), list(cycle.indices)
    j = 0
    while j < len(pts):
        rest = pts[:j] + pts[j + 1:]
        sub = contains_cycle(rest, directions)
        if sub is None:
            j += 1
            continue
        keep = [k if k < j else k + 1 for k in sub.indices]
        pts = [pts[k] for k in keep]
        idx = [idx[k] for k in keep]
        lam = list(sub.lam)
        j = 0
    return Cycle(tuple(pts), tuple(lam), tuple(idx))


def decompose_two_direction_cycle(cycle: Cycle, directions: Sequence) -> list[ClosedPath]:
    """Closed paths whose vertex sets together make up a two-direction cycle.

    In the bipartite level graph every edge of a cycle lies on a graph
    cycle.  Graph cycles are peeled off edge-disjointly while possible, so
    an edge-disjoint union of closed paths comes back as exactly those
    paths.  Edges left over after peeling are covered by a cycle through
    them in the full graph, which may reuse already-emitted points.
    """
    if len(directions) != 2:
        raise NotTwoDirections(f"expected 2 directions, got {len(directions)}")
    if not certify(cycle, directions):
        raise InvalidCycle("input is not a cycle for these directions")
    a1, a2 = (direction(a) for a in directions)
    pts = list(cycle.points)
    edges = level_graph_edges(pts, a1, a2)

    out = []
    covered = set()
    remaining = list(range(len(edges)))
    while remaining:
        cyc = find_cycle_edges(edges, remaining)
        if cyc is None:
            break
        out.append(closed_path([pts[e] for e in cyc], a1, a2))
        covered.update(cyc)
        remaining = [e for e in remaining if e not in covered]

    for e in range(len(edges)):
        if e in covered:
            continue
        u, v = edges[e]
        adj: dict = {}
        for f, (x, y) in enumerate(edges):
            if f != e:
                adj.setdefault(x, []).append((y, f))
                adj.setdefault(y, []).append((x, f))
        path = bfs_edge_path(adj, v, u)
        if path is None:
            raise InvalidCycle(f"point {pts[e]} lies on no closed path")
        cyc = [e] + path
        out.append(closed_path([pts[f] for f in cyc], a1, a2))
        covered.update(cyc)
    return out
