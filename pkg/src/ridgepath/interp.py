"""Interpolation by sums of ridge functions on finite point sets.

For directions ``a^1..a^r`` we look for ``g_1..g_r`` with
``sum_i g_i(a^i . x^j) = F(x^j)`` at every node.  Only the values of each
``g_i`` on the finitely many levels that occur matter, so this is a linear
system whose matrix is the transpose of the cycle incidence matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cycles import Cycle, build_incidence, contains_cycle
from .errors import DimensionMismatch, DuplicatePoint, MissingLevel
from .exactnum import as_vector, dot, nullspace_basis, rank, solve_linear
from .geometry import direction


@dataclass(frozen=True)
class InterpolationProblem:
    points: tuple
    directions: tuple
    data: tuple

    def __post_init__(self):
        pts = tuple(as_vector(p) for p in self.points)
        dirs = tuple(direction(a) for a in self.directions)
        data = as_vector(self.data)
        if not dirs:
            raise ValueError("at least one direction is required")
        if len(data) != len(pts):
            raise DimensionMismatch(f"{len(pts)} points but {len(data)} data values")
        if len(set(pts)) != len(pts):
            raise DuplicatePoint("interpolation nodes must be pairwise distinct")
        n = len(dirs[0])
        if any(len(a) != n for a in dirs) or any(len(p) != n for p in pts):
            raise DimensionMismatch("points and directions must share a dimension")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "directions", dirs)
        object.__setattr__(self, "data", data)


@dataclass(frozen=True)
class RidgeAssignment:
    """``values[i]`` maps each level of direction ``i`` to ``g_i`` there."""

    values: tuple

    def evaluate(self, directions, x) -> Fraction:
        total = Fraction(0)
        for i, (a, g) in enumerate(zip(directions, self.values)):
            level = dot(a, x)
            if level not in g:
                raise MissingLevel(f"g_{i + 1} is undefined at level {level}")
            total += g[level]
        return total


@dataclass(frozen=True)
class Feasibility:
    interpolable: bool
    certificate: Cycle | None = None

    def __bool__(self):
        return self.interpolable


def interpolable_for_all_data(points: Sequence, directions: Sequence) -> Feasibility:
    """Decide whether every data vector on ``points`` is a ridge sum.

    That holds iff the incidence matrix has full column rank.  When it does
    not, a cycle inside the set is attached as the certificate.
    """
    m, _ = build_incidence(points, directions)
    full = rank(m.transpose()) == m.ncols
    if full:
        return Feasibility(True)
    return Feasibility(False, contains_cycle(points, directions))


def solve_interpolation(problem: InterpolationProblem) -> RidgeAssignment | None:
    """Exact ridge-sum interpolant of the data, or None if none exists.

    Unknowns not pinned down by the data are set to zero.
    """
    m, index = build_incidence(problem.points, problem.directions)
    sol = solve_linear(m.transpose(), problem.data)
    if not sol.consistent:
        return None
    values = [{} for _ in index.levels]
    for (i, gamma, _), x in zip(index.rows(), sol.particular):
        values[i][gamma] = x
    return RidgeAssignment(tuple(values))


def verify_representation(assignment: RidgeAssignment, problem: InterpolationProblem) -> bool:
    return all(
        assignment.evaluate(problem.directions, x) == f
        for x, f in zip(problem.points, problem.data)
    )


def obstruction_pairing(cycle: Cycle, data: Sequence) -> Fraction:
    """``sum_j lambda_j F(x^j)``; vanishes for every ridge sum ``F``.

    ``data`` lists the values on the cycle's own points, in order.
    """
    data = as_vector(data)
    if len(data) != len(cycle.lam):
        raise DimensionMismatch(f"cycle has {len(cycle.lam)} points but {len(data)} values were given")
    return dot(cycle.lam, data)


def obstruction_certificate(problem: InterpolationProblem) -> Cycle | None:
    """A cycle whose pairing with the problem's data is nonzero.

    Exists exactly when the data admit no interpolant: the data lie in the
    row space of the incidence matrix iff every kernel vector annihilates
    them.  The first kernel basis vector that does not is returned,
    restricted to its support.
    """
    m, _ = build_incidence(problem.points, problem.directions)
    for v in nullspace_basis(m):
        if dot(v, problem.data) != 0:
            idx = tuple(j for j, x in enumerate(v) if x != 0)
            return Cycle(tuple(problem.points[j] for j in idx), tuple(v[j] for j in idx), idx)
    return None
