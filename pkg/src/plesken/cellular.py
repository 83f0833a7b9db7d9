"""Cell data, cell modules, Gram forms and the orthogonal-sum certificate.

A cell datum carries a finite poset of cell labels, an index set M(lam) per
label, and a bijection between index-set pairs (s, t) and algebra basis
elements; the ambient anti-involution must swap the two index positions.
The axioms checked by `validate_cell_datum` are:

* C1: the triple map (lam, s, t) -> basis index is a bijection onto the
  basis.
* C2: the involution sends the (lam, s, t) basis element to (lam, t, s).
* C3: left multiplication is triangular, so a * C[lam, s, t] is a
  combination of C[lam, s', t] (same t!) plus terms in strictly lower
  cells, with coefficients r_a(s', s) independent of t.

Because the cellular basis *is* the algebra basis here, C3 is a support
check on structure constants plus a coefficient comparison across t; no
linear algebra is needed.  The C3 coefficients give the cell module action
matrices, products of cellular basis elements give the Gram matrix of each
cell, and the whole package is assembled by `verify_theorem`: when every
Gram form is non-degenerate and the direct sum of cell representations is
injective, the skew part of the involution maps isomorphically onto the
block-skew matrices (X^T G + G X = 0 per cell), the direct sum of the
orthogonal Lie algebras of the Gram forms.  The poset is used only through
its comparability pairs, so non-total orders work unchanged.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .algebra import (
    Algebra,
    AntiInvolution,
    InternalConsistencyError,
    plesken_subspace,
)
from .builders import (
    PlanarRookDiagram,
    TLDiagram,
    planar_rook_diagrams,
    temperley_lieb_diagrams,
)
from .linalg import Matrix, rank
from .scalars import ZERO, GaussianRational

Label = object  # cell labels are small hashable values (ints here)


class CellDatum:
    """Poset of cells, index sets, and the triple-to-basis bijection."""

    def __init__(
        self,
        lambdas: Sequence[Label],
        less_pairs,
        index_sets: Mapping,
        basis_map: Mapping,
        involution: AntiInvolution,
    ):
        self.lambdas = tuple(lambdas)
        if len(set(self.lambdas)) != len(self.lambdas):
            raise ValueError("duplicate cell labels")
        self.less = frozenset((a, b) for a, b in less_pairs)
        for a, b in self.less:
            if a not in self.lambdas or b not in self.lambdas:
                raise ValueError("order pair mentions unknown cell label")
            if a == b:
                raise ValueError("strict order cannot be reflexive")
        for a, b in self.less:
            for c, d in self.less:
                if b == c and (a, d) not in self.less:
                    raise ValueError("order pairs are not transitively closed")
        self.index_sets = {lam: tuple(index_sets.get(lam, ())) for lam in self.lambdas}
        self.basis_map = dict(basis_map)
        self.involution = involution
        self.triples_of: dict[int, list[tuple]] = {}
        for triple, idx in self.basis_map.items():
            self.triples_of.setdefault(idx, []).append(triple)
        self._lower_cache: dict[Label, frozenset[int]] = {}

    @property
    def dim(self) -> int:
        return len(self.basis_map)

    def is_less(self, a: Label, b: Label) -> bool:
        return (a, b) in self.less

    def members(self, lam: Label) -> tuple:
        return self.index_sets[lam]

    def lower_indices(self, lam: Label) -> frozenset[int]:
        """Basis indices of all cells strictly below lam."""
        cached = self._lower_cache.get(lam)
        if cached is None:
            cached = frozenset(
                idx
                for (mu, _, _), idx in self.basis_map.items()
                if self.is_less(mu, lam)
            )
            self._lower_cache[lam] = cached
        return cached


# ---------------------------------------------------------------------------
# Cell data for the built-in families


def cell_datum_matrix(n: int, involution: AntiInvolution) -> CellDatum:
    """Single-cell datum for M(n): C(s, t) = E_st."""
    members = tuple(range(1, n + 1))
    basis_map = {
        (1, s, t): (s - 1) * n + (t - 1) for s in members for t in members
    }
    return CellDatum((1,), (), {1: members}, basis_map, involution)


def cell_datum_planar_rook(n: int, involution: AntiInvolution) -> CellDatum:
    """Cells of PR(n): label = arc count, index set = endpoint subsets."""
    diagrams = planar_rook_diagrams(n)
    index = {d: i for i, d in enumerate(diagrams)}
    lambdas = tuple(range(n + 1))
    less = [(a, b) for a in lambdas for b in lambdas if a < b]
    index_sets = {
        lam: tuple(itertools.combinations(range(1, n + 1), lam)) for lam in lambdas
    }
    basis_map = {}
    for lam in lambdas:
        for s in index_sets[lam]:
            for t in index_sets[lam]:
                basis_map[(lam, s, t)] = index[PlanarRookDiagram(n, s, t)]
    return CellDatum(lambdas, less, index_sets, basis_map, involution)


def half_diagrams(n: int, cups: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Non-crossing partial matchings of 1..n with the given number of cups
    and every unmatched point outside all cups (sorted cup tuples)."""
    results: list[tuple[tuple[int, int], ...]] = []

    def walk(pos: int, stack: tuple[int, ...], cups_made: tuple[tuple[int, int], ...]):
        if pos > n:
            if not stack and len(cups_made) == cups:
                results.append(tuple(sorted(cups_made)))
            return
        walk(pos + 1, stack + (pos,), cups_made)  # open a cup
        if stack:
            walk(pos + 1, stack[:-1], cups_made + ((stack[-1], pos),))  # close
        else:
            walk(pos + 1, stack, cups_made)  # defect at nesting depth 0
        return

    walk(1, (), ())
    return tuple(sorted(set(results)))


def _glue_halves(n, top_cups, bottom_cups) -> TLDiagram:
    pairs = list(top_cups)
    for a, b in bottom_cups:
        pairs.append((a + n, b + n))
    top_defects = [p for p in range(1, n + 1) if all(p not in cup for cup in top_cups)]
    bottom_defects = [
        p for p in range(1, n + 1) if all(p not in cup for cup in bottom_cups)
    ]
    for a, b in zip(top_defects, bottom_defects):
        pairs.append((a, b + n))
    return TLDiagram.from_pairs(n, pairs)


def _split_diagram(d: TLDiagram):
    n = d.n
    top_cups, bottom_cups, through = [], [], 0
    for a, b in d.pairs:
        if b <= n:
            top_cups.append((a, b))
        elif a > n:
            bottom_cups.append((a - n, b - n))
        else:
            through += 1
    return through, tuple(sorted(top_cups)), tuple(sorted(bottom_cups))


def cell_datum_temperley_lieb(n: int, involution: AntiInvolution) -> CellDatum:
    """Cells of TL(n): label = through-strand count, index set = half diagrams."""
    diagrams = temperley_lieb_diagrams(n)
    index = {d: i for i, d in enumerate(diagrams)}
    lambdas = tuple(range(n % 2, n + 1, 2))
    less = [(a, b) for a in lambdas for b in lambdas if a < b]
    index_sets = {lam: half_diagrams(n, (n - lam) // 2) for lam in lambdas}
    basis_map = {}
    for lam in lambdas:
        for s in index_sets[lam]:
            for t in index_sets[lam]:
                basis_map[(lam, s, t)] = index[_glue_halves(n, s, t)]
    return CellDatum(lambdas, less, index_sets, basis_map, involution)


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class CellValidationFailure:
    clause: str  # "C1", "C2" or "C3"
    witness: tuple
    message: str

    def __str__(self):
        return f"{self.clause} fails: {self.message} (witness {self.witness})"


def validate_cell_datum(
    algebra: Algebra, sigma: AntiInvolution, cd: CellDatum
) -> Optional[CellValidationFailure]:
    """Check C1-C3; returns the first failure report, or None."""
    # C1: the triple map covers M(lam) x M(lam) for every lam and hits each
    # basis index exactly once.
    expected = {
        (lam, s, t)
        for lam in cd.lambdas
        for s in cd.members(lam)
        for t in cd.members(lam)
    }
    actual = set(cd.basis_map)
    if actual != expected:
        missing = sorted(map(repr, expected - actual))
        extra = sorted(map(repr, actual - expected))
        return CellValidationFailure(
            "C1",
            (tuple(missing[:1]), tuple(extra[:1])),
            "triple map domain is not the union of M(lam) x M(lam)",
        )
    values = sorted(cd.basis_map.values())
    if values != list(range(algebra.dim)):
        dupes = [idx for idx, reps in cd.triples_of.items() if len(reps) > 1]
        return CellValidationFailure(
            "C1",
            (tuple(dupes[:1]),),
            "triple map is not a bijection onto the basis",
        )
    # C2: sigma swaps the two index positions.
    for (lam, s, t), idx in cd.basis_map.items():
        image = sigma.apply_vector(algebra.basis_vector(idx))
        if image != algebra.basis_vector(cd.basis_map[(lam, t, s)]):
            return CellValidationFailure(
                "C2", (lam, s, t), "involution does not send C[s,t] to C[t,s]"
            )
    # C3: triangular action with t-independent coefficients.
    for a in range(algebra.dim):
        for lam in cd.lambdas:
            members = cd.members(lam)
            if not members:
                continue
            lower = cd.lower_indices(lam)
            reference: Optional[dict] = None
            reference_t = None
            for t in members:
                block: dict[tuple, GaussianRational] = {}
                for s in members:
                    for k, c in algebra.product_terms(a, cd.basis_map[(lam, s, t)]):
                        if k in lower:
                            continue
                        triple = cd.triples_of[k][0]
                        if triple[0] != lam or triple[2] != t:
                            return CellValidationFailure(
                                "C3",
                                (a, lam, s, t, algebra.labels[k]),
                                "product has support outside column t "
                                "and the lower cells",
                            )
                        block[(triple[1], s)] = c
                if reference is None:
                    reference, reference_t = block, t
                elif block != reference:
                    return CellValidationFailure(
                        "C3",
                        (a, lam, reference_t, t),
                        "action coefficients depend on t",
                    )
    return None


# ---------------------------------------------------------------------------
# Cell modules and Gram forms


@dataclass(frozen=True)
class CellModule:
    lam: Label
    basis: tuple
    action: Mapping[int, Matrix]  # algebra basis index -> matrix on the module

    @property
    def dim(self) -> int:
        return len(self.basis)

    def act(self, x: Sequence) -> Matrix:
        """Matrix of an arbitrary algebra element on the module."""
        out = Matrix.zeros(self.dim, self.dim)
        for a, coeff in enumerate(x):
            if coeff:
                out = out + self.action[a].scale(coeff)
        return out


def cell_module(algebra: Algebra, cd: CellDatum, lam: Label) -> CellModule:
    """Extract the action matrices from the triangularity coefficients.

    Requires a validated datum; the coefficients are read off against the
    first column index t.
    """
    members = cd.members(lam)
    pos = {s: i for i, s in enumerate(members)}
    lower = cd.lower_indices(lam)
    action = {}
    t0 = members[0] if members else None
    for a in range(algebra.dim):
        rows = [[ZERO] * len(members) for _ in members]
        if t0 is not None:
            for s in members:
                for k, c in algebra.product_terms(a, cd.basis_map[(lam, s, t0)]):
                    if k in lower:
                        continue
                    triple = cd.triples_of[k][0]
                    rows[pos[triple[1]]][pos[s]] = c
        action[a] = Matrix(rows)
    return CellModule(lam, members, action)


def module_axiom_failure(algebra: Algebra, module: CellModule) -> Optional[tuple]:
    """First failure of rho(unit) = id or rho(ei ej) = rho(ei) rho(ej)."""
    d = module.dim
    if module.act(algebra.unit) != Matrix.identity(d):
        return ("unit",)
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            expected = Matrix.zeros(d, d)
            for k, c in algebra.product_terms(i, j):
                expected = expected + module.action[k].scale(c)
            if module.action[i] @ module.action[j] != expected:
                return (i, j)
    return None


@dataclass(frozen=True)
class GramForm:
    lam: Label
    gram: Matrix

    @property
    def size(self) -> int:
        return self.gram.rows

    @property
    def rank(self) -> int:
        return rank(self.gram)

    @property
    def nondegenerate(self) -> bool:
        return self.rank == self.size


def gram_matrix(algebra: Algebra, cd: CellDatum, lam: Label) -> GramForm:
    """Gram matrix of the cell bilinear form.

    Entry (t, u) is the coefficient of C[s, v] in C[s, t] * C[u, v] modulo
    the lower cells, read off at witness indices s, v; a second witness pair
    re-verifies the independence when the cell has more than one index.
    """
    members = cd.members(lam)
    if not members:
        return GramForm(lam, Matrix([]))
    witnesses = [(members[0], members[0])]
    if len(members) > 1:
        witnesses.append((members[-1], members[-1]))
    grams = []
    for s, v in witnesses:
        rows = []
        target = cd.basis_map[(lam, s, v)]
        lower = cd.lower_indices(lam)
        for t in members:
            row = []
            left = cd.basis_map[(lam, s, t)]
            for u in members:
                right = cd.basis_map[(lam, u, v)]
                value = ZERO
                for k, c in algebra.product_terms(left, right):
                    if k == target:
                        value = c
                    elif k not in lower:
                        triple = cd.triples_of[k][0]
                        raise InternalConsistencyError(
                            f"cell product has unexpected support at {triple}"
                        )
                row.append(value)
            rows.append(row)
        grams.append(Matrix(rows))
    if len(grams) == 2 and grams[0] != grams[1]:
        raise InternalConsistencyError("Gram entries depend on the witness pair")
    return GramForm(lam, grams[0])


@dataclass(frozen=True)
class SemisimplicityReport:
    semisimple: bool
    ranks: tuple[tuple[Label, int, int], ...]  # (lam, size, rank)

    def as_dict(self) -> dict:
        return {
            "semisimple": self.semisimple,
            "cells": [
                {"cell": lam, "size": size, "rank": rk, "deficit": size - rk}
                for lam, size, rk in self.ranks
            ],
        }


def is_semisimple(algebra: Algebra, cd: CellDatum) -> SemisimplicityReport:
    """Semisimple iff every cell Gram matrix has full rank."""
    ranks = []
    for lam in cd.lambdas:
        form = gram_matrix(algebra, cd, lam)
        ranks.append((lam, form.size, form.rank))
    return SemisimplicityReport(
        all(size == rk for _, size, rk in ranks), tuple(ranks)
    )


@dataclass(frozen=True)
class PredictedDecomposition:
    sizes: tuple[tuple[Label, int], ...]  # (lam, module dimension)
    lie_dim: int

    def size_list(self) -> list[int]:
        return [d for _, d in self.sizes]

    def as_dict(self) -> dict:
        return {
            "blocks": [{"cell": lam, "size": d} for lam, d in self.sizes],
            "lie_dim": self.lie_dim,
        }


def predicted_decomposition(
    cd: CellDatum, grams: Sequence[GramForm]
) -> PredictedDecomposition:
    """Orthogonal block sizes predicted for a semisimple datum.

    Refuses (ValueError) when some Gram form is degenerate, since the
    prediction only means anything under the semisimplicity hypothesis.
    Cells with empty index sets are skipped.
    """
    for form in grams:
        if not form.nondegenerate:
            raise ValueError(
                f"cell {form.lam!r} has a degenerate Gram form; "
                "no decomposition is predicted"
            )
    sizes = tuple(
        (lam, len(cd.members(lam))) for lam in cd.lambdas if cd.members(lam)
    )
    lie_dim = sum(d * (d - 1) // 2 for _, d in sizes)
    return PredictedDecomposition(sizes, lie_dim)


# ---------------------------------------------------------------------------
# The certificate


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of the orthogonal-decomposition verification.

    certified means all three checks passed: (a) the direct sum of cell
    representations is injective on the algebra, (b) every skew-part basis
    element acts G-skewly on every cell (X^T G + G X = 0), and (c) the
    skew part has dimension sum(d(d-1)/2).  A refutation records the first
    failed check; (b) holds for every valid datum, so refutations normally
    come from (a) on non-semisimple input.
    """

    certified: bool
    injective: bool
    skew_ok: bool
    skew_witness: Optional[tuple]
    lie_dim: int
    predicted_lie_dim: int
    block_sizes: tuple[tuple[Label, int], ...]
    gram_ranks: tuple[tuple[Label, int, int], ...]
    failed_check: Optional[str]

    def as_dict(self) -> dict:
        return {
            "certified": self.certified,
            "checks": {
                "representation_injective": self.injective,
                "form_skewness": self.skew_ok,
                "dimension_match": self.lie_dim == self.predicted_lie_dim,
            },
            "skew_witness": list(self.skew_witness) if self.skew_witness else None,
            "lie_dim": self.lie_dim,
            "predicted_lie_dim": self.predicted_lie_dim,
            "blocks": [{"cell": lam, "size": d} for lam, d in self.block_sizes],
            "gram_ranks": [
                {"cell": lam, "size": size, "rank": rk}
                for lam, size, rk in self.gram_ranks
            ],
            "failed_check": self.failed_check,
        }


def verify_theorem(
    algebra: Algebra, sigma: AntiInvolution, cd: CellDatum
) -> TheoremReport:
    """Certify (or refute) that the skew part is the direct sum of the
    orthogonal Lie algebras of the cell Gram forms."""
    modules = {lam: cell_module(algebra, cd, lam) for lam in cd.lambdas}
    grams = {lam: gram_matrix(algebra, cd, lam) for lam in cd.lambdas}
    gram_ranks = tuple((lam, grams[lam].size, grams[lam].rank) for lam in cd.lambdas)

    # (a) injectivity of the combined cell representation.
    rows = []
    for lam in cd.lambdas:
        module = modules[lam]
        for r in range(module.dim):
            for c in range(module.dim):
                rows.append(
                    [module.action[a].data[r][c] for a in range(algebra.dim)]
                )
    injective = bool(rows) and rank(Matrix(rows)) == algebra.dim

    # (b) G-skewness of the action of every skew-part basis element.
    sub = plesken_subspace(algebra, sigma)
    skew_ok = True
    skew_witness = None
    for r, x in enumerate(sub.basis):
        for lam in cd.lambdas:
            module = modules[lam]
            if module.dim == 0:
                continue
            g = grams[lam].gram
            action = module.act(x)
            if (action.transpose() @ g) + (g @ action) != Matrix.zeros(
                module.dim, module.dim
            ):
                skew_ok = False
                skew_witness = (r, lam)
                break
        if not skew_ok:
            break

    # (c) dimension count.
    block_sizes = tuple(
        (lam, len(cd.members(lam))) for lam in cd.lambdas if cd.members(lam)
    )
    predicted = sum(d * (d - 1) // 2 for _, d in block_sizes)
    dims_match = sub.dim == predicted

    failed = None
    if not injective:
        failed = "representation_injective"
    elif not skew_ok:
        failed = "form_skewness"
    elif not dims_match:
        failed = "dimension_match"
    return TheoremReport(
        certified=failed is None,
        injective=injective,
        skew_ok=skew_ok,
        skew_witness=skew_witness,
        lie_dim=sub.dim,
        predicted_lie_dim=predicted,
        block_sizes=block_sizes,
        gram_ranks=gram_ranks,
        failed_check=failed,
    )


@dataclass(frozen=True)
class GramPropertyFailure:
    lam: Label
    kind: str  # "symmetry" or "adjointness"
    witness: tuple

    def __str__(self):
        return f"cell {self.lam!r}: {self.kind} fails at {self.witness}"


def check_gram_properties(
    algebra: Algebra, sigma: AntiInvolution, cd: CellDatum, lam: Label
) -> Optional[GramPropertyFailure]:
    """Check G = G^T and rho(sigma(a))^T G = G rho(a) for all basis a.

    These hold for every valid cell datum, semisimple or not.
    """
    module = cell_module(algebra, cd, lam)
    g = gram_matrix(algebra, cd, lam).gram
    if g != g.transpose():
        return GramPropertyFailure(lam, "symmetry", ())
    for a in range(algebra.dim):
        image = sigma.apply_vector(algebra.basis_vector(a))
        lhs = module.act(image).transpose() @ g
        rhs = g @ module.action[a]
        if lhs != rhs:
            return GramPropertyFailure(lam, "adjointness", (a,))
    return None
