"""Finite-dimensional associative algebras with anti-involution.

An `Algebra` is a labeled basis together with a sparse structure-constant
tensor: the product of basis elements e_i * e_j is stored as a short list of
(k, coefficient) terms.  An `AntiInvolution` acts on coefficient vectors by
a matrix, optionally composed with entrywise scalar conjugation (needed for
conjugate-transposition, which is semilinear rather than linear over Q(i)).

The central construction here is the skew part of the involution: the span
of all a - sigma(a), which is closed under the commutator bracket and hence
a Lie algebra.  For a linear involution this span is exactly the
(-1)-eigenspace of sigma, computed as the kernel of (sigma + id); this uses
that the scalars Q(i) have characteristic zero.  For a conjugating
involution the eigenspace reading is unavailable and the span is generated
from basis vectors and their imaginary multiples instead.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Optional, Sequence

from .linalg import (
    Matrix,
    Subspace,
    Vector,
    kernel_subspace,
    unit_vector,
    vec_is_zero,
    vec_sub,
    vector,
    zero_vector,
)
from .scalars import I, ONE, ZERO, GaussianRational, scalar


class InternalConsistencyError(RuntimeError):
    """A condition that the mathematics guarantees was violated anyway."""


Terms = tuple[tuple[int, GaussianRational], ...]


class Algebra:
    """Associative algebra given by labeled basis, structure tensor and unit."""

    def __init__(self, labels: Sequence[str], structure: Mapping, unit: Sequence):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        if len(set(self.labels)) != self.dim:
            raise ValueError("basis labels must be distinct")
        self.unit = vector(unit)
        if len(self.unit) != self.dim:
            raise ValueError("unit vector has wrong length")
        table: dict[tuple[int, int], Terms] = {}
        for (i, j), terms in structure.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"structure index out of range: {(i, j)}")
            merged: dict[int, GaussianRational] = {}
            for k, c in terms:
                if not 0 <= k < self.dim:
                    raise ValueError(f"structure target out of range: {k}")
                merged[k] = merged.get(k, ZERO) + scalar(c)
            cleaned = tuple(sorted((k, c) for k, c in merged.items() if c))
            if cleaned:
                table[(i, j)] = cleaned
        self.structure = table

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.labels == other.labels
            and self.unit == other.unit
            and self.structure == other.structure
        )

    __hash__ = None

    def __repr__(self):
        return f"Algebra(dim={self.dim})"

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def basis_element(self, i: int) -> AlgebraElement:
        return AlgebraElement(self, self.basis_vector(i))

    def element(self, coeffs: Sequence) -> AlgebraElement:
        return AlgebraElement(self, vector(coeffs))

    def unit_element(self) -> AlgebraElement:
        return AlgebraElement(self, self.unit)

    def product_terms(self, i: int, j: int) -> Terms:
        return self.structure.get((i, j), ())

    def multiply_vectors(self, x: Sequence, y: Sequence) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("dimension mismatch")
        acc = [ZERO] * self.dim
        get = self.structure.get
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                terms = get((i, j))
                if not terms:
                    continue
                c = xi * yj
                for k, s in terms:
                    acc[k] = acc[k] + c * s
        return tuple(acc)

    def commutator(self, x: Sequence, y: Sequence) -> Vector:
        return vec_sub(self.multiply_vectors(x, y), self.multiply_vectors(y, x))


class AlgebraElement:
    """A coefficient vector tied to a specific algebra."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs: Sequence):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coeffs", vector(coeffs))
        if len(self.coeffs) != algebra.dim:
            raise ValueError("dimension mismatch")

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    def _check_same(self, other: AlgebraElement):
        if self.algebra is not other.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check_same(other)
        return AlgebraElement(
            self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        self._check_same(other)
        return AlgebraElement(
            self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_same(other)
            return AlgebraElement(
                self.algebra, self.algebra.multiply_vectors(self.coeffs, other.coeffs)
            )
        return AlgebraElement(self.algebra, tuple(scalar(other) * a for a in self.coeffs))

    def __rmul__(self, other):
        return AlgebraElement(self.algebra, tuple(scalar(other) * a for a in self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.algebra is other.algebra
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return vec_is_zero(self.coeffs)

    def __repr__(self):
        return f"<{describe_vector(self.algebra.labels, self.coeffs)}>"


def describe_vector(labels: Sequence[str], coeffs: Sequence) -> str:
    """Human-readable linear combination, e.g. '2*k' or 'E12-E21'."""
    parts = []
    for label, c in zip(labels, coeffs):
        if not c:
            continue
        if c == ONE:
            term = label
        elif c == -ONE:
            term = f"-{label}"
        else:
            text = str(c)
            if "+" in text[1:] or "-" in text[1:]:
                text = f"({text})"
            term = f"{text}*{label}"
        if parts and not term.startswith("-"):
            parts.append(f"+{term}")
        else:
            parts.append(term)
    return "".join(parts) if parts else "0"


def multiply(algebra: Algebra, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the structure tensor."""
    if x.algebra is not algebra or y.algebra is not algebra:
        raise ValueError("elements do not belong to the given algebra")
    return AlgebraElement(algebra, algebra.multiply_vectors(x.coeffs, y.coeffs))


@dataclass(frozen=True)
class AntiInvolution:
    """Action of sigma on coefficient vectors.

    `matrix` is applied after entrywise scalar conjugation of the input when
    `conjugates_scalars` is set (conjugate-transposition on matrix algebras
    over Q(i) is of this semilinear kind).  In both cases sigma squares to
    the identity and reverses products.
    """

    matrix: Matrix
    conjugates_scalars: bool = False

    @cached_property
    def _signed_permutation(self):
        # (perm, signs) with column j supported at row perm[j]; None if the
        # matrix is not a signed permutation.  Used as a fast apply path.
        n = self.matrix.rows
        if n != self.matrix.cols:
            return None
        perm = [-1] * n
        signs = [ONE] * n
        for j in range(n):
            hits = [(i, self.matrix.data[i][j]) for i in range(n) if self.matrix.data[i][j]]
            if len(hits) != 1 or hits[0][1] not in (ONE, -ONE):
                return None
            perm[j], signs[j] = hits[0]
        if sorted(perm) != list(range(n)):
            return None
        return tuple(perm), tuple(signs)

    def apply_vector(self, v: Sequence) -> Vector:
        v = vector(v)
        if self.conjugates_scalars:
            v = tuple(c.conjugate() for c in v)
        sp = self._signed_permutation
        if sp is not None:
            perm, signs = sp
            out = [ZERO] * len(v)
            for j, c in enumerate(v):
                if c:
                    out[perm[j]] = signs[j] * c
            return tuple(out)
        return self.matrix.apply(v)

    def apply(self, elem: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(elem.algebra, self.apply_vector(elem.coeffs))


def validate_associativity(algebra: Algebra) -> Optional[tuple[int, int, int]]:
    """First basis triple (lexicographic) where (ei ej) ek != ei (ej ek), else None."""
    get = algebra.structure.get
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            t_ij = get((i, j), ())
            for k in range(n):
                left: dict[int, GaussianRational] = {}
                for l, c in t_ij:
                    for m, d in get((l, k), ()):
                        left[m] = left.get(m, ZERO) + c * d
                right: dict[int, GaussianRational] = {}
                for l, c in get((j, k), ()):
                    for m, d in get((i, l), ()):
                        right[m] = right.get(m, ZERO) + c * d
                if {m: v for m, v in left.items() if v} != {
                    m: v for m, v in right.items() if v
                }:
                    return (i, j, k)
    return None


def validate_unit(algebra: Algebra) -> Optional[int]:
    """First basis index where unit * e_i != e_i or e_i * unit != e_i, else None."""
    for i in range(algebra.dim):
        e = algebra.basis_vector(i)
        if algebra.multiply_vectors(algebra.unit, e) != e:
            return i
        if algebra.multiply_vectors(e, algebra.unit) != e:
            return i
    return None


@dataclass(frozen=True)
class InvolutionFailure:
    kind: str  # "shape", "square" or "antihomomorphism"
    witness: tuple

    def __str__(self):
        if self.kind == "shape":
            return "involution matrix shape does not match the algebra"
        if self.kind == "square":
            return f"sigma^2 != id at basis index {self.witness[0]}"
        return f"sigma(ei ej) != sigma(ej) sigma(ei) at basis pair {self.witness}"


def validate_involution(
    algebra: Algebra, sigma: AntiInvolution
) -> Optional[InvolutionFailure]:
    """Check sigma^2 = id on the basis and the anti-homomorphism law on all pairs."""
    if sigma.matrix.rows != algebra.dim or sigma.matrix.cols != algebra.dim:
        return InvolutionFailure("shape", (sigma.matrix.rows, sigma.matrix.cols))
    images = [sigma.apply_vector(algebra.basis_vector(i)) for i in range(algebra.dim)]
    for i in range(algebra.dim):
        if sigma.apply_vector(images[i]) != algebra.basis_vector(i):
            return InvolutionFailure("square", (i,))
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            product = zero_vector(algebra.dim)
            terms = algebra.product_terms(i, j)
            if terms:
                acc = [ZERO] * algebra.dim
                for k, c in terms:
                    acc[k] = c
                product = tuple(acc)
            lhs = sigma.apply_vector(product)
            rhs = algebra.multiply_vectors(images[j], images[i])
            if lhs != rhs:
                return InvolutionFailure("antihomomorphism", (i, j))
    return None


def skew_part(sigma: AntiInvolution, v: Sequence) -> Vector:
    """v - sigma(v)."""
    return vec_sub(vector(v), sigma.apply_vector(v))


def plesken_subspace(algebra: Algebra, sigma: AntiInvolution) -> Subspace:
    """Canonical basis of the span of all a - sigma(a).

    Linear sigma: the kernel of (sigma + id), cross-checked against the span
    of the generators e_i - sigma(e_i).  Conjugating sigma: since the hat map
    is only Q-linear, basis vectors and their multiples by the imaginary unit
    are both needed to generate the Q(i)-span.
    """
    n = algebra.dim
    if sigma.conjugates_scalars:
        generators = []
        for i in range(n):
            e = algebra.basis_vector(i)
            generators.append(skew_part(sigma, e))
            ie = tuple(I * c for c in e)
            generators.append(skew_part(sigma, ie))
        return Subspace.from_vectors(n, generators)
    eigen = kernel_subspace(sigma.matrix + Matrix.identity(n))
    generated = Subspace.from_vectors(
        n, [skew_part(sigma, algebra.basis_vector(i)) for i in range(n)]
    )
    if eigen != generated:
        raise InternalConsistencyError(
            "(-1)-eigenspace differs from the span of the generators"
        )
    return eigen


def plesken_basis(algebra: Algebra, sigma: AntiInvolution) -> list[AlgebraElement]:
    """Echelonized basis of the skew part {a : sigma(a) = -a}."""
    return [
        AlgebraElement(algebra, row)
        for row in plesken_subspace(algebra, sigma).basis
    ]


def plesken_lie_algebra(algebra: Algebra, sigma: AntiInvolution) -> "LieAlgebra":
    """The Lie algebra on the skew part, with brackets expressed in its basis.

    Expressing [x, y] must succeed for every basis pair; failure would mean
    the bracket left the subspace, which the closure identity rules out.
    """
    from .lie import LieAlgebra

    sub = plesken_subspace(algebra, sigma)
    vecs = sub.basis
    labels = _lie_labels(algebra.labels, vecs)
    table: dict[tuple[int, int], Terms] = {}
    for a in range(len(vecs)):
        for b in range(a + 1, len(vecs)):
            z = algebra.commutator(vecs[a], vecs[b])
            coeffs = sub.coordinates(z)
            if coeffs is None:
                raise InternalConsistencyError(
                    f"bracket of basis pair ({a}, {b}) left the skew part"
                )
            terms = tuple((k, c) for k, c in enumerate(coeffs) if c)
            if terms:
                table[(a, b)] = terms
    return LieAlgebra(labels, table)


def _lie_labels(ambient_labels: Sequence[str], vecs: Sequence[Vector]) -> list[str]:
    labels = []
    for r, v in enumerate(vecs):
        text = describe_vector(ambient_labels, v)
        nonzero = sum(1 for c in v if c)
        if nonzero <= 2 and len(text) <= 24 and all(c in (ONE, -ONE) for c in v if c):
            labels.append(text)
        else:
            labels.append(f"x{r}")
    # Fall back uniformly if sparse rendering produced duplicates.
    if len(set(labels)) != len(labels):
        labels = [f"x{r}" for r in range(len(vecs))]
    return labels


@dataclass(frozen=True)
class ClosureCounterexample:
    sample: int
    a: Vector
    b: Vector
    reason: str


def bracket_closure_check(
    algebra: Algebra,
    sigma: AntiInvolution,
    samples: int,
    *,
    seed: int,
) -> Optional[ClosureCounterexample]:
    """Randomized check of the four-term closure identity.

    For random a, b the bracket of the skew parts must equal
    hat(ab) - hat(a sigma(b)) - hat(sigma(a) b) + hat(sigma(a) sigma(b)),
    and must lie in the span of the skew part.  Coefficients are drawn
    uniformly from the integers -9..9, so reruns with the same seed are
    reproducible.
    """
    rng = random.Random(seed)
    sub = plesken_subspace(algebra, sigma)
    mul = algebra.multiply_vectors

    def hat(v):
        return skew_part(sigma, v)
    for trial in range(samples):
        a = vector(rng.randint(-9, 9) for _ in range(algebra.dim))
        b = vector(rng.randint(-9, 9) for _ in range(algebra.dim))
        sa = sigma.apply_vector(a)
        sb = sigma.apply_vector(b)
        lhs = algebra.commutator(hat(a), hat(b))
        rhs = vec_sub(
            vec_sub(hat(mul(a, b)), hat(mul(a, sb))),
            vec_sub(hat(mul(sa, b)), hat(mul(sa, sb))),
        )
        if lhs != rhs:
            return ClosureCounterexample(trial, a, b, "four-term identity failed")
        if not sub.contains(lhs):
            return ClosureCounterexample(trial, a, b, "bracket left the skew part")
    return None
