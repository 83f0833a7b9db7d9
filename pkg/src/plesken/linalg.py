"""Dense exact linear algebra over Q(i): rref, rank, kernels, solving.

Matrices are immutable and dense; at the scale this package targets
(dimensions up to around a hundred) plain Gauss-Jordan elimination with
leading-1 normalization is fast enough, and the uniqueness of the reduced
row echelon form gives canonical representatives for subspaces.  Two
subspaces are equal exactly when their rref row bases coincide, which is
how `Subspace` equality is defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .scalars import ONE, ZERO, GaussianRational, scalar

Vector = tuple[GaussianRational, ...]


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return (ZERO,) * i + (ONE,) + (ZERO,) * (n - i - 1)


def vector(values: Iterable) -> Vector:
    return tuple(scalar(v) for v in values)


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c: GaussianRational, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def vec_is_zero(x: Vector) -> bool:
    return not any(x)


class Matrix:
    """Immutable dense matrix of GaussianRational entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: Sequence[Sequence]):
        data = tuple(tuple(scalar(v) for v in row) for row in rows)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", len(data[0]) if data else 0)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([unit_vector(n, i) for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> Matrix:
        return cls(columns).transpose()

    @property
    def entries(self) -> Vector:
        """Row-major flattening; len == rows * cols."""
        return tuple(v for row in self.data for v in row)

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.data)

    def transpose(self) -> Matrix:
        return Matrix(list(zip(*self.data))) if self.data else Matrix([])

    def conjugate(self) -> Matrix:
        return Matrix([[v.conjugate() for v in row] for row in self.data])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __add__(self, other: Matrix) -> Matrix:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Matrix([vec_add(a, b) for a, b in zip(self.data, other.data)])

    def __sub__(self, other: Matrix) -> Matrix:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Matrix([vec_sub(a, b) for a, b in zip(self.data, other.data)])

    def __neg__(self) -> Matrix:
        return Matrix([[-v for v in row] for row in self.data])

    def scale(self, c) -> Matrix:
        c = scalar(c)
        return Matrix([[c * v for v in row] for row in self.data])

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = other.transpose().data
        return Matrix(
            [[_dot(row, col) for col in cols] for row in self.data]
        )

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(_dot(row, v) for row in self.data)

    def is_zero(self) -> bool:
        return all(not v for row in self.data for v in row)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


def _dot(x, y):
    acc = ZERO
    for a, b in zip(x, y):
        if a and b:
            acc = acc + a * b
    return acc


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form with its pivot columns.

    The result is the unique rref of `m`; the row space is preserved.
    """
    work = [list(row) for row in m.data]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        lead = work[r][c]
        if lead != ONE:
            inv = ONE / lead
            row = work[r]
            for j in range(c, ncols):
                if row[j]:
                    row[j] = inv * row[j]
        pivot = work[r]
        for i in range(nrows):
            if i == r:
                continue
            factor = work[i][c]
            if not factor:
                continue
            row = work[i]
            for j in range(c, ncols):
                if pivot[j]:
                    row[j] = row[j] - factor * pivot[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(work), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list[Vector]:
    """Echelonized basis of the right null space; empty iff rank == cols."""
    return list(kernel_subspace(m).basis)


def kernel_subspace(m: Matrix) -> Subspace:
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced.data[r][f]
        vectors.append(v)
    return Subspace.from_vectors(m.cols, vectors)


def solve(m: Matrix, rhs: Sequence) -> Optional[Vector]:
    """Some exact solution of m @ x = rhs, or None if the system is inconsistent."""
    rhs = vector(rhs)
    if len(rhs) != m.rows:
        raise ValueError("shape mismatch")
    augmented = Matrix([row + (b,) for row, b in zip(m.data, rhs)]) if m.rows else m
    if m.rows == 0:
        return zero_vector(m.cols)
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = reduced.data[r][m.cols]
    return tuple(x)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q(i)^ambient in canonical (rref row basis) form.

    Equality of subspaces is equality of the canonical bases, so `==` is a
    genuine subspace-equality test.
    """

    ambient: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def from_vectors(cls, ambient: int, vectors: Iterable[Sequence]) -> Subspace:
        rows = [vector(v) for v in vectors]
        if not rows:
            return cls(ambient, (), ())
        reduced, pivots = rref(Matrix(rows))
        return cls(ambient, reduced.data[: len(pivots)], pivots)

    @classmethod
    def zero(cls, ambient: int) -> Subspace:
        return cls(ambient, (), ())

    @classmethod
    def full(cls, ambient: int) -> Subspace:
        return cls(
            ambient,
            tuple(unit_vector(ambient, i) for i in range(ambient)),
            tuple(range(ambient)),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        """Coefficients of v in the canonical basis, or None if v is outside.

        Because the basis rows are in rref, the coefficient of row r is just
        the entry of v at the r-th pivot; membership is then a residual check.
        """
        v = vector(v)
        if len(v) != self.ambient:
            raise ValueError("shape mismatch")
        coeffs = tuple(v[p] for p in self.pivots)
        residual = list(v)
        for c, row in zip(coeffs, self.basis):
            if not c:
                continue
            for j, entry in enumerate(row):
                if entry:
                    residual[j] = residual[j] - c * entry
        if any(residual):
            return None
        return coeffs

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None
