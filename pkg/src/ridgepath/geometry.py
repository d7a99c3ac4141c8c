"""Lines in R^n and the reduction of the three-line problem to the plane.

Two independent directions ``a1, a2`` are completed to a basis; the
resulting change of coordinates ``y = S x`` turns level sets of ``a1.x``
and ``a2.x`` into level sets of the first two coordinates, so paths with
respect to ``a1, a2`` correspond to axis-aligned paths after dropping all
but two coordinates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    DependentDirections,
    DimensionMismatch,
    NotThreeDistinctLines,
    PointNotOnProjection,
)
from .exactnum import Matrix, as_vector, inverse, is_zero, rank, rref, vadd, vscale


def direction(components) -> tuple:
    """Validate and coerce a direction vector."""
    v = as_vector(components)
    if not v or is_zero(v):
        raise ValueError("a direction must be a nonzero vector")
    return v


@dataclass(frozen=True)
class Line:
    """The line ``{base + t * dir}`` in R^n."""

    base: tuple
    dir: tuple

    def __post_init__(self):
        object.__setattr__(self, "base", as_vector(self.base))
        object.__setattr__(self, "dir", as_vector(self.dir))
        if len(self.base) != len(self.dir):
            raise DimensionMismatch("line base and direction differ in length")
        if is_zero(self.dir):
            raise ValueError("line direction must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.base)

    def at(self, t) -> tuple:
        return vadd(self.base, vscale(t, self.dir))

    def parameter_of(self, x) -> Fraction | None:
        """The ``t`` with ``at(t) == x``, or None if ``x`` is off the line."""
        x = as_vector(x)
        j = next(i for i, d in enumerate(self.dir) if d != 0)
        t = (x[j] - self.base[j]) / self.dir[j]
        return t if self.at(t) == x else None

    def contains(self, x) -> bool:
        return self.parameter_of(x) is not None

    def same_set(self, other: "Line") -> bool:
        if self.dim != other.dim:
            return False
        if rank(Matrix.from_rows([self.dir, other.dir])) != 1:
            return False
        return self.contains(other.base)


@dataclass(frozen=True)
class Line2D:
    """Planar line ``alpha*x1 + beta*x2 = gamma``, scaled so the first
    nonzero of ``(alpha, beta)`` is 1."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        a, b, c = (Fraction(v) for v in (self.alpha, self.beta, self.gamma))
        if a == 0 and b == 0:
            raise ValueError("(alpha, beta) must not both vanish")
        lead = a if a != 0 else b
        object.__setattr__(self, "alpha", a / lead)
        object.__setattr__(self, "beta", b / lead)
        object.__setattr__(self, "gamma", c / lead)

    @classmethod
    def through(cls, point, direction) -> "Line2D":
        (x, y), (d1, d2) = as_vector(point), as_vector(direction)
        return cls(d2, -d1, d2 * x - d1 * y)

    @classmethod
    def from_slope(cls, slope, intercept) -> "Line2D":
        """``x2 = slope * x1 + intercept``."""
        return cls(-Fraction(slope), 1, Fraction(intercept))

    @classmethod
    def vertical(cls, x) -> "Line2D":
        return cls(1, 0, x)

    @classmethod
    def horizontal(cls, y) -> "Line2D":
        return cls(0, 1, y)

    def contains(self, p) -> bool:
        return self.alpha * p[0] + self.beta * p[1] == self.gamma

    @property
    def is_horizontal(self) -> bool:
        return self.alpha == 0

    @property
    def is_vertical(self) -> bool:
        return self.beta == 0

    @property
    def axis_parallel(self) -> bool:
        return self.is_horizontal or self.is_vertical

    @property
    def slope(self) -> Fraction:
        if self.beta == 0:
            raise ZeroDivisionError("vertical line has no slope")
        return -self.alpha / self.beta

    @property
    def intercept(self) -> Fraction:
        if self.beta == 0:
            raise ZeroDivisionError("vertical line has no intercept")
        return self.gamma / self.beta

    def x_at(self, y) -> Fraction:
        if self.alpha == 0:
            raise ZeroDivisionError("horizontal line")
        return (self.gamma - self.beta * y) / self.alpha

    def y_at(self, x) -> Fraction:
        if self.beta == 0:
            raise ZeroDivisionError("vertical line")
        return (self.gamma - self.alpha * x) / self.beta

    def parallel_to(self, other: "Line2D") -> bool:
        return self.alpha == other.alpha and self.beta == other.beta

    def intersection(self, other: "Line2D") -> tuple | None:
        det = self.alpha * other.beta - self.beta * other.alpha
        if det == 0:
            return None
        x = (self.gamma * other.beta - self.beta * other.gamma) / det
        y = (self.alpha * other.gamma - self.gamma * other.alpha) / det
        return (x, y)

    def __str__(self) -> str:
        terms = []
        for coef, var in ((self.alpha, "x1"), (self.beta, "x2")):
            if coef == 0:
                continue
            mag = "" if abs(coef) == 1 else f"{abs(coef)}*"
            sign = "-" if coef < 0 else ("+" if terms else "")
            terms.append(f"{sign} {mag}{var}" if terms else f"{sign}{mag}{var}")
        return f"{' '.join(terms)} = {self.gamma}"


@dataclass(frozen=True)
class ReductionMap:
    s: Matrix
    s_inverse: Matrix

    @property
    def dim(self) -> int:
        return self.s.nrows


def complete_to_basis(a1, a2) -> ReductionMap:
    """Extend ``a1, a2`` to an invertible ``S`` with rows ``a1, a2, e_j, ...``.

    The appended unit vectors are those at the non-pivot columns of the
    2 x n matrix ``[a1; a2]``, lowest index first.
    """
    a1, a2 = direction(a1), direction(a2)
    if len(a1) != len(a2):
        raise DimensionMismatch("directions of different dimension")
    n = len(a1)
    res = rref(Matrix.from_rows([a1, a2]))
    if res.rank < 2:
        raise DependentDirections(f"directions {_fmt(a1)} and {_fmt(a2)} are linearly dependent")
    rows = [a1, a2]
    for j in range(n):
        if j not in res.pivots:
            rows.append(tuple(Fraction(int(i == j)) for i in range(n)))
    s = Matrix.from_rows(rows)
    return ReductionMap(s, inverse(s))


def transform_point(rmap: ReductionMap, x) -> tuple:
    return rmap.s.apply(as_vector(x))


def inverse_transform_point(rmap: ReductionMap, y) -> tuple:
    return rmap.s_inverse.apply(as_vector(y))


def transform_line(rmap: ReductionMap, line: Line) -> Line:
    return Line(rmap.s.apply(line.base), rmap.s.apply(line.dir))


def project_line(line: Line):
    """Drop all but the first two coordinates.

    Returns the point ``(c1, c2)`` when the line's direction vanishes in
    both kept coordinates, otherwise the :class:`Line2D` image.
    """
    if line.dim < 2:
        raise DimensionMismatch("projection needs at least two coordinates")
    c = line.base[:2]
    d = line.dir[:2]
    if is_zero(d):
        return c
    return Line2D.through(c, d)


class Case(enum.Enum):
    DEGENERATE_POINT = "degenerate-point"
    DEGENERATE_COINCIDE = "degenerate-coincide"
    DEGENERATE_PREIMAGE = "degenerate-preimage"
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    CASE4 = "case4"


@dataclass(frozen=True)
class Classification:
    case: Case
    # indices of the projection(s) responsible for a degenerate verdict
    culprits: tuple = ()
    intersection: tuple | None = None


def classify_three_lines(p1, p2, p3) -> Classification:
    """Sort three planar projections into exactly one of the cases.

    Each argument is a :class:`Line2D` or a 2-tuple point.  Checks run in a
    fixed order so the verdict is unique: point images, coinciding images,
    axis-parallel lines, all parallel, concurrent, otherwise generic.
    """
    ps = (p1, p2, p3)
    for i, p in enumerate(ps):
        if not isinstance(p, Line2D):
            return Classification(Case.DEGENERATE_POINT, (i,))
    for i in range(3):
        for j in range(i + 1, 3):
            if ps[i] == ps[j]:
                return Classification(Case.DEGENERATE_COINCIDE, (i, j))
    if any(p.axis_parallel for p in ps):
        return Classification(Case.CASE1, tuple(i for i, p in enumerate(ps) if p.axis_parallel))
    if p1.parallel_to(p2) and p2.parallel_to(p3):
        return Classification(Case.CASE2)
    o = p1.intersection(p2)
    if o is not None and p3.contains(o):
        return Classification(Case.CASE3, intersection=o)
    return Classification(Case.CASE4)


def check_distinct(lines: Sequence[Line]) -> None:
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if lines[i].same_set(lines[j]):
                raise NotThreeDistinctLines(f"lines {i} and {j} are the same line")


class Lifted(NamedTuple):
    points: tuple
    assignment: tuple
    # True when a 2D vertex had two preimages and the result is a point pair
    collapsed: bool


def _preimage(tline: Line, p) -> Fraction | None:
    """Parameter of the point on ``tline`` projecting to ``p``."""
    d1, d2 = tline.dir[0], tline.dir[1]
    c1, c2 = tline.base[0], tline.base[1]
    if d1 != 0:
        t = (p[0] - c1) / d1
    elif d2 != 0:
        t = (p[1] - c2) / d2
    else:
        return None
    if c1 + t * d1 != p[0] or c2 + t * d2 != p[1]:
        return None
    return t


def lift_path(path2d: Sequence, assignment: Sequence[int], lines: Sequence[Line], rmap: ReductionMap) -> Lifted:
    """Recover the n-dimensional vertices of a planar path.

    ``lines`` are in original coordinates.  Each vertex is lifted along its
    assigned line.  If a vertex turns out to have two distinct preimages in
    the union of the lines, those two points already form a closed path and
    are returned instead (``collapsed=True``).
    """
    tlines = [transform_line(rmap, ln) for ln in lines]
    out = []
    for p, i in zip(path2d, assignment):
        p = as_vector(p)
        tl = tlines[i]
        if is_zero(tl.dir[:2]):
            if tuple(tl.base[:2]) != p:
                raise PointNotOnProjection(f"{_fmt(p)} is not the image of line {i}")
            return Lifted((lines[i].at(0), lines[i].at(1)), (i, i), True)
        t = _preimage(tl, p)
        if t is None:
            raise PointNotOnProjection(f"{_fmt(p)} is not on the projection of line {i}")
        z = inverse_transform_point(rmap, tl.at(t))
        for j, other in enumerate(tlines):
            if j == i:
                continue
            if is_zero(other.dir[:2]):
                if tuple(other.base[:2]) == p:
                    return Lifted((lines[j].at(0), lines[j].at(1)), (j, j), True)
                continue
            tj = _preimage(other, p)
            if tj is not None:
                zj = inverse_transform_point(rmap, other.at(tj))
                if zj != z:
                    return Lifted((z, zj), (i, j), True)
        out.append(z)
    return Lifted(tuple(out), tuple(assignment), False)


def _fmt(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"
