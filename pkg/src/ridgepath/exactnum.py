"""Exact rational scalars, dense matrices and the linear-algebra kernel.

Everything is computed over :class:`fractions.Fraction`; there is no
floating point anywhere in this module.  Matrices are immutable and all
routines are pure, so results can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

__all__ = [
    "Rational",
    "Matrix",
    "RrefResult",
    "LinearSolution",
    "as_rational",
    "as_vector",
    "dot",
    "vadd",
    "vsub",
    "vscale",
    "is_zero",
    "rref",
    "rank",
    "nullspace_basis",
    "solve_linear",
    "inverse",
    "determinant",
    "combine_full_support",
    "max_support_nullvector",
    "full_support_nullvector",
]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are rejected."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, float):
        raise TypeError(f"refusing to convert float {x!r} to an exact rational")
    return Fraction(x)


def as_vector(xs: Iterable) -> tuple:
    return tuple(as_rational(x) for x in xs)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"dot product of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u, v) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector sum of lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector difference of lengths {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v) -> tuple:
    c = as_rational(c)
    return tuple(c * a for a in v)


def is_zero(v) -> bool:
    return all(a == 0 for a in v)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of Fractions.

    ``nrows`` is kept explicitly so that an ``r x 0`` matrix still knows
    how many rows it has.
    """

    nrows: int
    ncols: int
    entries: tuple = field(repr=False)

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.nrows or any(len(r) != self.ncols for r in self.entries):
            raise DimensionMismatch("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "Matrix":
        rows = tuple(as_vector(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols, tuple((Fraction(0),) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(
            n,
            n,
            tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)),
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.ncols,
            self.nrows,
            tuple(self.column(j) for j in range(self.ncols)),
        )

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product ``self @ v``."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} matrix applied to length {len(v)}")
        return tuple(dot(r, v) for r in self.entries)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = [other.column(j) for j in range(other.ncols)]
            return Matrix(
                self.nrows,
                other.ncols,
                tuple(tuple(dot(r, c) for c in cols) for r in self.entries),
            )
        return self.apply(other)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise DimensionMismatch("hstack of matrices with different row counts")
        return Matrix(
            self.nrows,
            self.ncols + other.ncols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries) + "]"


@dataclass(frozen=True)
class RrefResult:
    reduced: Matrix
    pivots: tuple
    rank: int


def rref(m: Matrix) -> RrefResult:
    """Gauss-Jordan reduction to the unique reduced row echelon form."""
    a = [list(r) for r in m.entries]
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    prow = 0
    for col in range(ncols):
        if prow == nrows:
            break
        src = next((i for i in range(prow, nrows) if a[i][col] != 0), None)
        if src is None:
            continue
        a[prow], a[src] = a[src], a[prow]
        p = a[prow][col]
        if p != 1:
            a[prow] = [x / p for x in a[prow]]
        pr = a[prow]
        for i in range(nrows):
            f = a[i][col]
            if i != prow and f != 0:
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
        pivots.append(col)
        prow += 1
    reduced = Matrix(nrows, ncols, tuple(tuple(r) for r in a))
    return RrefResult(reduced, tuple(pivots), len(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def _kernel_from_rref(res: RrefResult, ncols: int) -> list[tuple]:
    pivset = set(res.pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, p in enumerate(res.pivots):
            v[p] = -res.reduced[i, free]
        basis.append(tuple(v))
    return basis


def nullspace_basis(m: Matrix) -> list[tuple]:
    """Canonical free-variable basis of ``{v : m v = 0}``.

    One vector per non-pivot column ``f`` of the RREF, with a 1 at ``f``,
    zeros at the other free columns, and the negated RREF entries at the
    pivot columns.
    """
    return _kernel_from_rref(rref(m), m.ncols)


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of :func:`solve_linear`.

    ``kind`` is ``"unique"``, ``"parametric"`` or ``"inconsistent"``.  For
    the first two, ``particular`` solves the system with every free unknown
    set to zero and ``kernel`` spans the homogeneous solutions.
    """

    kind: str
    particular: tuple | None = None
    kernel: tuple = ()

    @property
    def consistent(self) -> bool:
        return self.kind != "inconsistent"

    def at(self, params: Sequence) -> tuple:
        """Member of the solution family with the given kernel coefficients."""
        if not self.consistent:
            raise ValueError("inconsistent system has no solutions")
        if len(params) != len(self.kernel):
            raise DimensionMismatch(f"expected {len(self.kernel)} parameters")
        x = self.particular
        for c, k in zip(params, self.kernel):
            x = vadd(x, vscale(c, k))
        return x


def solve_linear(a: Matrix, b: Sequence) -> LinearSolution:
    b = as_vector(b)
    if len(b) != a.nrows:
        raise DimensionMismatch(f"system has {a.nrows} rows but right-hand side has {len(b)}")
    aug = a.hstack(Matrix(a.nrows, 1, tuple((x,) for x in b)))
    res = rref(aug)
    if a.ncols in res.pivots:
        return LinearSolution("inconsistent")
    x = [Fraction(0)] * a.ncols
    for i, p in enumerate(res.pivots):
        x[p] = res.reduced[i, a.ncols]
    kernel = tuple(_kernel_from_rref(RrefResult(res.reduced, res.pivots, res.rank), a.ncols))
    kind = "unique" if not kernel else "parametric"
    return LinearSolution(kind, tuple(x), kernel)


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise DimensionMismatch("only square matrices are invertible")
    n = m.nrows
    res = rref(m.hstack(Matrix.identity(n)))
    if res.pivots[:n] != tuple(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix(n, n, tuple(r[n:] for r in res.reduced.entries))


def determinant(m: Matrix) -> Fraction:
    """Determinant by fraction-preserving elimination."""
    if m.nrows != m.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    a = [list(r) for r in m.entries]
    n = m.nrows
    det = Fraction(1)
    for col in range(n):
        src = next((i for i in range(col, n) if a[i][col] != 0), None)
        if src is None:
            return Fraction(0)
        if src != col:
            a[col], a[src] = a[src], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for i in range(col + 1, n):
            f = a[i][col] / p
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det


def combine_full_support(basis: Sequence[Sequence]) -> tuple | None:
    """Integer combination ``v1 + c2 v2 + ... + cq vq`` with maximal support.

    Each ``ci`` is the smallest positive integer that keeps nonzero every
    coordinate already made nonzero by ``v1..v(i-1)``.  The result is
    nonzero exactly on the union of the supports of the basis vectors.
    Returns None for an empty basis.
    """
    if not basis:
        return None
    w = as_vector(basis[0])
    for v in basis[1:]:
        v = as_vector(v)
        forbidden = {-wj / vj for wj, vj in zip(w, v) if wj != 0 and vj != 0}
        c = 1
        while c in forbidden:
            c += 1
        w = tuple(wj + c * vj for wj, vj in zip(w, v))
    return w


def max_support_nullvector(m: Matrix) -> tuple | None:
    """Kernel vector whose support is every coordinate any kernel vector touches."""
    return combine_full_support(nullspace_basis(m))


def full_support_nullvector(m: Matrix) -> tuple | None:
    """Kernel vector with no zero component, or None if there is none."""
    v = max_support_nullvector(m)
    if v is None or any(x == 0 for x in v):
        return None
    return v
