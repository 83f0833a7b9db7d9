"""Structure theory for Lie algebras given by structure constants.

A `LieAlgebra` stores its bracket sparsely for index pairs i < j; the other
half of the table follows by antisymmetry.  Subspaces are the canonical
rref-basis `Subspace` values from `linalg`, so series stabilization is
detected by exact subspace equality.

`orthogonal_model` builds direct sums of the skew-symmetric matrix Lie
algebras o(d); `fingerprint` collects exact invariants (derived and lower
central series, center, Killing rank, solvability) that are compared
field-by-field by `fingerprint_match`.  A matching fingerprint is a
necessary condition for isomorphism, not a proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .linalg import Matrix, Subspace, Vector, kernel_subspace, rank, vector
from .scalars import ONE, ZERO, GaussianRational

Terms = tuple[tuple[int, GaussianRational], ...]


class LieAlgebra:
    """Labeled basis plus sparse bracket structure constants."""

    def __init__(self, labels: Sequence[str], table):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        cleaned: dict[tuple[int, int], Terms] = {}
        for (i, j), terms in table.items():
            if not 0 <= i < j < self.dim:
                raise ValueError("bracket table keys must satisfy i < j")
            terms = tuple(sorted((k, c) for k, c in terms if c))
            if terms:
                cleaned[(i, j)] = terms
        self.table = cleaned

    def bracket_terms(self, i: int, j: int) -> Terms:
        if i == j:
            return ()
        if i < j:
            return self.table.get((i, j), ())
        return tuple((k, -c) for k, c in self.table.get((j, i), ()))

    def bracket_vectors(self, x: Sequence, y: Sequence) -> Vector:
        x, y = vector(x), vector(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("dimension mismatch")
        acc = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                terms = self.bracket_terms(i, j)
                if not terms:
                    continue
                c = xi * yj
                for k, s in terms:
                    acc[k] = acc[k] + c * s
        return tuple(acc)

    def jacobi_failure(self) -> Optional[tuple[int, int, int]]:
        """First basis triple violating the Jacobi identity, else None."""
        bt = self.bracket_terms
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    acc: dict[int, GaussianRational] = {}
                    for outer, inner_pair in ((i, (j, k)), (j, (k, i)), (k, (i, j))):
                        for l, c in bt(*inner_pair):
                            for m, d in bt(outer, l):
                                acc[m] = acc.get(m, ZERO) + c * d
                    if any(acc.values()):
                        return (i, j, k)
        return None

    def full_subspace(self) -> Subspace:
        return Subspace.full(self.dim)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim})"


def bracket_span(L: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """rref span of all [x, y] with x over a basis of u and y over a basis of v."""
    brackets = [
        L.bracket_vectors(x, y) for x in u.basis for y in v.basis
    ]
    return Subspace.from_vectors(L.dim, brackets)


def _series(L: LieAlgebra, step) -> list[Subspace]:
    chain = [L.full_subspace()]
    while chain[-1].dim:
        nxt = step(chain[-1])
        chain.append(nxt)
        if nxt == chain[-2]:
            break
    return chain


def derived_series(L: LieAlgebra) -> list[Subspace]:
    """L, [L,L], [[L,L],[L,L]], ... until zero or stable (repeat included)."""
    return _series(L, lambda s: bracket_span(L, s, s))


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
    """L, [L,L], [L,[L,L]], ... until zero or stable (repeat included)."""
    full = L.full_subspace()
    return _series(L, lambda s: bracket_span(L, full, s))


def center(L: LieAlgebra) -> Subspace:
    """{x : [x, e_j] = 0 for all j}, via the kernel of the stacked adjoints."""
    rows = []
    for j in range(L.dim):
        columns = [L.bracket_terms(i, j) for i in range(L.dim)]
        for k in range(L.dim):
            row = [ZERO] * L.dim
            nonzero = False
            for i, terms in enumerate(columns):
                for kk, c in terms:
                    if kk == k:
                        row[i] = c
                        nonzero = True
            if nonzero:
                rows.append(row)
    if not rows:
        return Subspace.full(L.dim)
    return kernel_subspace(Matrix(rows))


def killing_form(L: LieAlgebra) -> Matrix:
    """K(x, y) = trace(ad x . ad y), as a symmetric matrix on the basis."""
    n = L.dim
    bt = L.bracket_terms
    rows = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            s = ZERO
            for i in range(n):
                for k, c1 in bt(b, i):
                    for m, c2 in bt(a, k):
                        if m == i:
                            s = s + c1 * c2
            rows[a][b] = s
            rows[b][a] = s
    return Matrix(rows)


@dataclass(frozen=True)
class Fingerprint:
    """Exact structural invariants used as a necessary isomorphism filter."""

    dim: int
    derived_dims: tuple[int, ...]
    lower_central_dims: tuple[int, ...]
    center_dim: int
    killing_rank: int
    solvable: bool
    derived_length: Optional[int]
    nilpotent: bool

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "derived_dims": list(self.derived_dims),
            "lower_central_dims": list(self.lower_central_dims),
            "center_dim": self.center_dim,
            "killing_rank": self.killing_rank,
            "solvable": self.solvable,
            "derived_length": self.derived_length,
            "nilpotent": self.nilpotent,
        }


def fingerprint(L: LieAlgebra) -> Fingerprint:
    derived = [s.dim for s in derived_series(L)]
    lower = [s.dim for s in lower_central_series(L)]
    solvable = derived[-1] == 0
    nilpotent = lower[-1] == 0
    return Fingerprint(
        dim=L.dim,
        derived_dims=tuple(derived),
        lower_central_dims=tuple(lower),
        center_dim=center(L).dim,
        killing_rank=rank(killing_form(L)),
        solvable=solvable,
        derived_length=len(derived) - 1 if solvable else None,
        nilpotent=nilpotent,
    )


def _block_model(d: int) -> dict[tuple[int, int], Terms]:
    """Bracket table of o(d) on the basis E_rs - E_sr for 1 <= r < s <= d."""
    pairs = [(r, s) for r in range(1, d + 1) for s in range(r + 1, d + 1)]
    index = {p: i for i, p in enumerate(pairs)}

    def as_matrix(p):
        m = {}
        r, s = p
        m[(r, s)] = ONE
        m[(s, r)] = -ONE
        return m

    def matmul(x, y):
        out: dict[tuple[int, int], GaussianRational] = {}
        for (r, c1), v1 in x.items():
            for (c2, s), v2 in y.items():
                if c1 == c2:
                    out[(r, s)] = out.get((r, s), ZERO) + v1 * v2
        return out

    table: dict[tuple[int, int], Terms] = {}
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            xa, xb = as_matrix(pairs[a]), as_matrix(pairs[b])
            comm = matmul(xa, xb)
            for key, v in matmul(xb, xa).items():
                comm[key] = comm.get(key, ZERO) - v
            terms = []
            for (r, s), v in comm.items():
                if v and r < s:
                    terms.append((index[(r, s)], v))
            terms = tuple(sorted(terms))
            if terms:
                table[(a, b)] = terms
    return table


def orthogonal_model(sizes: Sequence[int]) -> LieAlgebra:
    """Block-diagonal direct sum of the skew-matrix Lie algebras o(d)."""
    labels: list[str] = []
    table: dict[tuple[int, int], Terms] = {}
    offset = 0
    for block, d in enumerate(sizes):
        if d < 0:
            raise ValueError("sizes must be non-negative")
        block_table = _block_model(d)
        count = d * (d - 1) // 2
        pairs = [(r, s) for r in range(1, d + 1) for s in range(r + 1, d + 1)]
        labels.extend(f"B{block}.{r},{s}" for r, s in pairs)
        for (a, b), terms in block_table.items():
            table[(a + offset, b + offset)] = tuple(
                (k + offset, c) for k, c in terms
            )
        offset += count
    return LieAlgebra(labels, table)


@dataclass(frozen=True)
class FingerprintComparison:
    matches: bool
    diffs: tuple[tuple[str, object, object], ...]  # (field, actual, expected)

    def as_dict(self) -> dict:
        return {
            "matches": self.matches,
            "diffs": [
                {"field": f, "actual": _plain(a), "expected": _plain(e)}
                for f, a, e in self.diffs
            ],
        }


def _plain(value):
    return list(value) if isinstance(value, tuple) else value


def fingerprint_match(L: LieAlgebra, sizes: Sequence[int]) -> FingerprintComparison:
    """Compare fingerprint(L) with the fingerprint of the model of given sizes."""
    actual = fingerprint(L)
    expected = fingerprint(orthogonal_model(sizes))
    diffs = []
    for field in Fingerprint.__dataclass_fields__:
        a = getattr(actual, field)
        e = getattr(expected, field)
        if a != e:
            diffs.append((field, a, e))
    return FingerprintComparison(not diffs, tuple(diffs))
