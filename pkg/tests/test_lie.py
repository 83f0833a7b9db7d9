import pytest

from plesken.algebra import plesken_lie_algebra, plesken_subspace
from plesken.builders import matrix_algebra, temperley_lieb
from plesken.builders import planar_rook
from plesken.lie import (
    LieAlgebra,
    bracket_span,
    center,
    derived_series,
    fingerprint,
    fingerprint_match,
    killing_form,
    lower_central_series,
    orthogonal_model,
)
from plesken.linalg import Subspace, vector
from plesken.scalars import scalar


def tl0_lie():
    A, sigma = temperley_lieb(4, 0)
    return A, sigma, plesken_lie_algebra(A, sigma)


def ambient_subspace(A, sigma, lie_subspace):
    """Transport a subspace from skew-part coordinates back to the algebra."""
    rows = plesken_subspace(A, sigma).basis
    vectors = []
    for coeffs in lie_subspace.basis:
        acc = [scalar(0)] * A.dim
        for c, row in zip(coeffs, rows):
            if c:
                acc = [a + c * r for a, r in zip(acc, row)]
        vectors.append(acc)
    return Subspace.from_vectors(A.dim, vectors)


def diagram_difference(A, sigma, pairs_list):
    from plesken.builders import TLDiagram, temperley_lieb_diagrams

    diagrams = temperley_lieb_diagrams(4)
    index = {d: i for i, d in enumerate(diagrams)}
    v = [scalar(0)] * A.dim
    v[index[TLDiagram.from_pairs(4, pairs_list)]] = scalar(1)
    image = sigma.apply_vector(v)
    return tuple(a - b for a, b in zip(v, image))


B1 = [(1, 2), (3, 5), (4, 8), (6, 7)]
B2 = [(1, 5), (2, 3), (4, 6), (7, 8)]
B3 = [(1, 2), (3, 5), (4, 6), (7, 8)]
B4 = [(1, 2), (3, 4), (5, 8), (6, 7)]


def test_bracket_span_abelian_is_zero():
    L = orthogonal_model([2, 2])  # two commuting one-dimensional blocks
    full = L.full_subspace()
    assert bracket_span(L, full, full).dim == 0


def test_derived_algebra_of_tl0():
    A, sigma, L = tl0_lie()
    derived = derived_series(L)[1]
    assert derived.dim == 3
    expected = Subspace.from_vectors(
        A.dim,
        [
            tuple(
                a + b
                for a, b in zip(
                    diagram_difference(A, sigma, B1),
                    diagram_difference(A, sigma, B2),
                )
            ),
            diagram_difference(A, sigma, B3),
            diagram_difference(A, sigma, B4),
        ],
    )
    assert ambient_subspace(A, sigma, derived) == expected


def test_second_derived_algebra_of_tl0():
    A, sigma, L = tl0_lie()
    second = derived_series(L)[2]
    assert ambient_subspace(A, sigma, second) == Subspace.from_vectors(
        A.dim, [diagram_difference(A, sigma, B4)]
    )


def test_orthogonal_three_is_perfect():
    L = orthogonal_model([3])
    assert bracket_span(L, L.full_subspace(), L.full_subspace()).dim == 3
    assert [s.dim for s in derived_series(L)] == [3, 3]


def test_derived_series_dims():
    _, _, L = tl0_lie()
    assert [s.dim for s in derived_series(L)] == [4, 3, 1, 0]
    assert [s.dim for s in derived_series(orthogonal_model([3, 3]))] == [6, 6]
    assert [s.dim for s in derived_series(orthogonal_model([2]))] == [1, 0]


def test_lower_central_series_dims():
    assert [s.dim for s in lower_central_series(orthogonal_model([2]))] == [1, 0]
    _, _, L = tl0_lie()
    assert [s.dim for s in lower_central_series(L)] == [4, 3, 3]


def test_series_terminate_quickly():
    for L in (tl0_lie()[2], orthogonal_model([1, 3, 2]), orthogonal_model([4])):
        assert len(derived_series(L)) <= L.dim + 2
        assert len(lower_central_series(L)) <= L.dim + 2


def test_center_examples():
    assert center(orthogonal_model([2])).dim == 1
    assert center(orthogonal_model([3])).dim == 0
    A, sigma, L = tl0_lie()
    b4 = diagram_difference(A, sigma, B4)
    coords = plesken_subspace(A, sigma).coordinates(b4)
    assert coords is not None
    assert center(L).contains(coords)


@pytest.mark.parametrize(
    "sizes, expected",
    [([2, 2, 3], 2), ([1, 2], 1), ([4], 0), ([1, 3, 3, 1], 0)],
)
def test_center_of_models(sizes, expected):
    assert center(orthogonal_model(sizes)).dim == expected


def test_killing_form_examples():
    zero = killing_form(orthogonal_model([2, 2]))
    assert zero.is_zero()
    k3 = killing_form(orthogonal_model([3]))
    from plesken.linalg import rank

    assert rank(k3) == 3
    A, sigma = matrix_algebra(3)
    L = plesken_lie_algebra(A, sigma)
    assert rank(killing_form(L)) == 3


def test_killing_form_ad_invariance():
    for L in (
        orthogonal_model([3]),
        orthogonal_model([1, 3, 2]),
        tl0_lie()[2],
        plesken_lie_algebra(*matrix_algebra(2, "conj_transpose")),
    ):
        K = killing_form(L)

        def k(x, y):
            acc = scalar(0)
            for i, xi in enumerate(x):
                if not xi:
                    continue
                for j, yj in enumerate(y):
                    if yj and K.data[i][j]:
                        acc = acc + xi * yj * K.data[i][j]
            return acc

        basis = [L.full_subspace().basis[i] for i in range(L.dim)]
        for x in basis:
            for y in basis:
                for z in basis:
                    assert k(L.bracket_vectors(x, y), z) == k(
                        x, L.bracket_vectors(y, z)
                    )


def test_fingerprint_tl0():
    _, _, L = tl0_lie()
    fp = fingerprint(L)
    assert fp.solvable and fp.derived_length == 3 and not fp.nilpotent
    assert fp.derived_dims == (4, 3, 1, 0)


def test_fingerprint_model_1331():
    fp = fingerprint(orthogonal_model([1, 3, 3, 1]))
    assert fp.dim == 6
    assert fp.center_dim == 0
    assert fp.killing_rank == 6
    assert fp.derived_dims == (6, 6)
    assert not fp.solvable and fp.derived_length is None


def test_fingerprint_zero_algebra():
    fp = fingerprint(LieAlgebra((), {}))
    assert fp.dim == 0 and fp.solvable and fp.nilpotent
    assert fp.derived_dims == (0,) and fp.killing_rank == 0


def test_orthogonal_model_so3_brackets():
    L = orthogonal_model([3])
    assert L.dim == 3
    # Basis order (1,2), (1,3), (2,3); commutators of the skew matrices.
    assert L.bracket_terms(0, 1) == ((2, scalar(-1)),)
    assert L.bracket_terms(0, 2) == ((1, scalar(1)),)
    assert L.bracket_terms(1, 2) == ((0, scalar(-1)),)


def test_orthogonal_model_dims():
    assert orthogonal_model([1, 3, 3, 1]).dim == 6
    two = orthogonal_model([2])
    assert two.dim == 1 and not two.table


@pytest.mark.parametrize(
    "sizes", [[3], [4], [1, 3, 2], [2, 2, 3], [1, 3, 3, 1], [5], [6], [1, 4, 6, 4, 1]]
)
def test_orthogonal_model_satisfies_jacobi(sizes):
    L = orthogonal_model(sizes)
    assert sum(d * (d - 1) // 2 for d in sizes) == L.dim <= 50
    assert L.jacobi_failure() is None
    x, y = vector([1] * L.dim), vector(range(L.dim))
    assert L.bracket_vectors(x, y) == tuple(-c for c in L.bracket_vectors(y, x))


def test_fingerprint_match_examples():
    A, sigma = planar_rook(3)
    L = plesken_lie_algebra(A, sigma)
    assert fingerprint_match(L, [1, 3, 3, 1]).matches

    _, _, L0 = tl0_lie()
    comparison = fingerprint_match(L0, [1, 3, 2])
    assert not comparison.matches
    assert any(field == "solvable" for field, _, _ in comparison.diffs)

    assert fingerprint_match(LieAlgebra((), {}), [1]).matches


def test_killing_form_is_symmetric():
    K = killing_form(tl0_lie()[2])
    assert K == K.transpose()


def test_quaternionic_matrices_give_a_perfect_algebra():
    # Anti-self-adjoint 2x2 quaternionic matrices: dimension 10, perfect,
    # trivial center, non-degenerate Killing form.
    from plesken.builders import matrix_over_algebra, quaternions
    from plesken.linalg import rank

    L = plesken_lie_algebra(*matrix_over_algebra(2, *quaternions()))
    fp = fingerprint(L)
    assert fp.dim == 10
    assert fp.derived_dims == (10, 10)
    assert fp.center_dim == 0
    assert fp.killing_rank == 10
    assert not fp.solvable
