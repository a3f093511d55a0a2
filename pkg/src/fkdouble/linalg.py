"""Exact row-reduction over Q(z): echelon bases, membership, kernels.

Matrices are plain lists of lists of Cyc.  Subspaces are kept in reduced
row echelon form, which is canonical, so equality of subspaces is row-wise
equality of their bases.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence

from .scalar import Cyc, ONE, ZERO

Vector = List[Cyc]
Matrix = List[List[Cyc]]


def zeros(n: int) -> Vector:
    return [ZERO] * n


def vec_add(u: Vector, v: Vector) -> Vector:
    return [a + b for a, b in zip(u, v)]

def vec_sub(u: Vector, v: Vector) -> Vector:
    return [a - b for a, b in zip(u, v)]

def vec_scale(c: Cyc, u: Vector) -> Vector:
    return [c * a for a in u]

def is_zero_vec(u: Vector) -> bool:
    return all(not a for a in u)


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return [
        sum((row[j] * v[j] for j in range(len(v)) if v[j]), ZERO)
        for row in m
    ]

def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0])
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b)) if a[i][k]), ZERO) for j in range(cols)]
        for i in range(len(a))
    ]

def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))

def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]

def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [vec_add(ra, rb) for ra, rb in zip(a, b)]

def mat_scale(c: Cyc, a: Matrix) -> Matrix:
    return [vec_scale(c, row) for row in a]


def rref(rows: Iterable[Vector]) -> tuple[Matrix, List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    pivots: List[int] = []
    out: Matrix = []
    for row in work:
        row = _reduce_against(row, out, pivots)
        piv = _first_nonzero(row)
        if piv is None:
            continue
        row = vec_scale(row[piv].inv(), row)
        # clear the new pivot column from earlier rows
        for i, prev in enumerate(out):
            if prev[piv]:
                out[i] = vec_sub(prev, vec_scale(prev[piv], row))
        # insert keeping pivot columns increasing
        at = 0
        while at < len(pivots) and pivots[at] < piv:
            at += 1
        out.insert(at, row)
        pivots.insert(at, piv)
    return out, pivots


def _first_nonzero(row: Vector) -> Optional[int]:
    for j, x in enumerate(row):
        if x:
            return j
    return None


def _reduce_against(row: Vector, basis: Matrix, pivots: List[int]) -> Vector:
    row = list(row)
    for r, p in zip(basis, pivots):
        if row[p]:
            row = vec_sub(row, vec_scale(row[p], r))
    return row


class SubspaceBasis:
    """A subspace of an ambient coordinate space, held in canonical RREF."""

    def __init__(self, ambient_dim: int, rows: Iterable[Vector] = ()):
        self.ambient_dim = ambient_dim
        self.rows, self.pivots = rref(rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def residual(self, v: Vector) -> Vector:
        return _reduce_against(v, self.rows, self.pivots)

    def contains_vector(self, v: Vector) -> bool:
        return is_zero_vec(self.residual(v))

    def contains(self, other: "SubspaceBasis") -> bool:
        return all(self.contains_vector(r) for r in other.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubspaceBasis)
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient_dim, tuple(tuple(r) for r in self.rows)))

    def add_rows(self, rows: Iterable[Vector]) -> "SubspaceBasis":
        return SubspaceBasis(self.ambient_dim, list(self.rows) + [list(r) for r in rows])

    def union(self, other: "SubspaceBasis") -> "SubspaceBasis":
        return self.add_rows(other.rows)

    def coords(self, v: Vector) -> Vector:
        """Coordinates of v in this basis; raises if v is not in the span."""
        out = zeros(self.dim)
        v = list(v)
        for i, (r, p) in enumerate(zip(self.rows, self.pivots)):
            if v[p]:
                out[i] = v[p]
                v = vec_sub(v, vec_scale(out[i], r))
        if not is_zero_vec(v):
            raise ValueError("vector not in subspace")
        return out

    def lift(self, coords: Vector) -> Vector:
        out = zeros(self.ambient_dim)
        for c, row in zip(coords, self.rows):
            if c:
                out = vec_add(out, vec_scale(c, row))
        return out


def kernel(m: Matrix, ncols: int) -> List[Vector]:
    """Basis of the right kernel {v : m v = 0} of an (anything x ncols) matrix."""
    if not m:
        return [e_i for e_i in identity(ncols)]
    reduced, pivots = rref(m)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    out = []
    for j in free:
        v = zeros(ncols)
        v[j] = ONE
        for row, p in zip(reduced, pivots):
            if row[j]:
                v[p] = -row[j]
        out.append(v)
    return out


def intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Intersection of two subspaces of the same ambient space."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    # solve x*A = y*B by finding the kernel of [A^T | -B^T] stacked columns
    rows_a, rows_b = a.rows, b.rows
    if not rows_a or not rows_b:
        return SubspaceBasis(a.ambient_dim)
    sys = [
        [rows_a[i][c] for i in range(len(rows_a))] + [-rows_b[i][c] for i in range(len(rows_b))]
        for c in range(a.ambient_dim)
    ]
    out = []
    for sol in kernel(sys, len(rows_a) + len(rows_b)):
        coeffs = sol[: len(rows_a)]
        vec = zeros(a.ambient_dim)
        for c, row in zip(coeffs, rows_a):
            if c:
                vec = vec_add(vec, vec_scale(c, row))
        if not is_zero_vec(vec):
            out.append(vec)
    return SubspaceBasis(a.ambient_dim, out)
