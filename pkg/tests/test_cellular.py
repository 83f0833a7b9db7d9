import math

import pytest

from plesken.algebra import plesken_basis
from plesken.builders import matrix_algebra, planar_rook, temperley_lieb
from plesken.cellular import (
    CellDatum,
    cell_datum_matrix,
    cell_datum_planar_rook,
    cell_datum_temperley_lieb,
    cell_module,
    check_gram_properties,
    gram_matrix,
    half_diagrams,
    is_semisimple,
    module_axiom_failure,
    predicted_decomposition,
    validate_cell_datum,
    verify_theorem,
)
from plesken.linalg import Matrix
from plesken.scalars import scalar


# -- data construction -------------------------------------------------------


def test_planar_rook_datum_counts():
    A, sigma = planar_rook(3)
    cd = cell_datum_planar_rook(3, sigma)
    assert [len(cd.members(lam)) for lam in cd.lambdas] == [1, 3, 3, 1]
    assert sorted(cd.basis_map.values()) == list(range(20))
    assert validate_cell_datum(A, sigma, cd) is None


def test_planar_rook_datum_n1():
    A, sigma = planar_rook(1)
    cd = cell_datum_planar_rook(1, sigma)
    assert [len(cd.members(lam)) for lam in cd.lambdas] == [1, 1]
    assert validate_cell_datum(A, sigma, cd) is None


@pytest.mark.parametrize("delta", ["0", "3"])
def test_temperley_lieb_datum(delta):
    A, sigma = temperley_lieb(4, scalar(delta))
    cd = cell_datum_temperley_lieb(4, sigma)
    sizes = {lam: len(cd.members(lam)) for lam in cd.lambdas}
    assert sizes == {4: 1, 2: 3, 0: 2}
    assert sum(d * d for d in sizes.values()) == 14 == A.dim
    assert validate_cell_datum(A, sigma, cd) is None


def test_half_diagram_counts_match_hook_formula():
    for n in range(1, 7):
        for p in range(n // 2 + 1):
            expected = math.comb(n, p) - (math.comb(n, p - 1) if p else 0)
            assert len(half_diagrams(n, p)) == expected


def test_reversed_poset_breaks_triangularity():
    A, sigma = planar_rook(2)
    cd = cell_datum_planar_rook(2, sigma)
    reversed_cd = CellDatum(
        cd.lambdas,
        [(b, a) for a, b in cd.less],
        cd.index_sets,
        cd.basis_map,
        sigma,
    )
    failure = validate_cell_datum(A, sigma, reversed_cd)
    assert failure is not None and failure.clause == "C3"


def test_c2_failure_detected():
    A, sigma = planar_rook(2)
    cd = cell_datum_planar_rook(2, sigma)
    # Swap two triples of the one-arc cell so sigma no longer transposes them.
    swapped = dict(cd.basis_map)
    a = (1, (1,), (2,))
    b = (1, (2,), (2,))
    swapped[a], swapped[b] = swapped[b], swapped[a]
    broken = CellDatum(cd.lambdas, cd.less, cd.index_sets, swapped, sigma)
    failure = validate_cell_datum(A, sigma, broken)
    assert failure is not None and failure.clause == "C2"


def test_c1_failure_detected():
    A, sigma = planar_rook(2)
    cd = cell_datum_planar_rook(2, sigma)
    broken_map = dict(cd.basis_map)
    del broken_map[(0, (), ())]
    broken = CellDatum(cd.lambdas, cd.less, cd.index_sets, broken_map, sigma)
    failure = validate_cell_datum(A, sigma, broken)
    assert failure is not None and failure.clause == "C1"


# -- cell modules -------------------------------------------------------------


def test_matrix_algebra_natural_module():
    n = 3
    A, sigma = matrix_algebra(n)
    cd = cell_datum_matrix(n, sigma)
    assert validate_cell_datum(A, sigma, cd) is None
    module = cell_module(A, cd, 1)
    assert module.dim == n
    for r in range(n):
        for s in range(n):
            expected = [[0] * n for _ in range(n)]
            expected[r][s] = 1
            assert module.action[r * n + s] == Matrix(expected)


def test_planar_rook_module_unit_action():
    A, sigma = planar_rook(3)
    cd = cell_datum_planar_rook(3, sigma)
    module = cell_module(A, cd, 1)
    assert module.dim == 3
    assert module.act(A.unit) == Matrix.identity(3)


def test_tl_module_axioms():
    A, sigma = temperley_lieb(4, 3)
    cd = cell_datum_temperley_lieb(4, sigma)
    module = cell_module(A, cd, 2)
    assert module.dim == 3
    assert module_axiom_failure(A, module) is None


# -- Gram forms ---------------------------------------------------------------


def test_gram_single_cup_cell():
    for delta, expected_rank in (("3", 1), ("0", 0)):
        A, sigma = temperley_lieb(2, scalar(delta))
        cd = cell_datum_temperley_lieb(2, sigma)
        form = gram_matrix(A, cd, 0)
        assert form.gram == Matrix([[scalar(delta)]])
        assert form.rank == expected_rank


def test_gram_planar_rook_identity():
    for n in (2, 3):
        A, sigma = planar_rook(n)
        cd = cell_datum_planar_rook(n, sigma)
        for lam in cd.lambdas:
            form = gram_matrix(A, cd, lam)
            assert form.gram == Matrix.identity(len(cd.members(lam)))


def test_gram_matrix_algebra_identity():
    A, sigma = matrix_algebra(3)
    cd = cell_datum_matrix(3, sigma)
    assert gram_matrix(A, cd, 1).gram == Matrix.identity(3)


@pytest.mark.parametrize(
    "factory, datum_factory",
    [
        (lambda: planar_rook(3), cell_datum_planar_rook),
        (lambda: temperley_lieb(4, 3), cell_datum_temperley_lieb),
        (lambda: temperley_lieb(4, 0), cell_datum_temperley_lieb),
    ],
)
def test_gram_symmetry_and_adjointness(factory, datum_factory):
    A, sigma = factory()
    n = 3 if datum_factory is cell_datum_planar_rook else 4
    cd = datum_factory(n, sigma)
    for lam in cd.lambdas:
        assert check_gram_properties(A, sigma, cd, lam) is None


# -- semisimplicity and the decomposition -------------------------------------


def test_semisimplicity_verdicts():
    A, sigma = planar_rook(3)
    assert is_semisimple(A, cell_datum_planar_rook(3, sigma)).semisimple

    A3, s3 = temperley_lieb(4, 3)
    assert is_semisimple(A3, cell_datum_temperley_lieb(4, s3)).semisimple

    A0, s0 = temperley_lieb(4, 0)
    verdict = is_semisimple(A0, cell_datum_temperley_lieb(4, s0))
    assert not verdict.semisimple
    assert any(rank < size for _, size, rank in verdict.ranks)


def test_predicted_decomposition():
    A, sigma = planar_rook(3)
    cd = cell_datum_planar_rook(3, sigma)
    grams = [gram_matrix(A, cd, lam) for lam in cd.lambdas]
    decomposition = predicted_decomposition(cd, grams)
    assert decomposition.size_list() == [1, 3, 3, 1]
    assert decomposition.lie_dim == 6

    A3, s3 = temperley_lieb(4, 3)
    cd3 = cell_datum_temperley_lieb(4, s3)
    grams3 = [gram_matrix(A3, cd3, lam) for lam in cd3.lambdas]
    decomposition3 = predicted_decomposition(cd3, grams3)
    assert sorted(decomposition3.size_list()) == [1, 2, 3]
    assert decomposition3.lie_dim == 4

    AM, sM = matrix_algebra(3)
    cdM = cell_datum_matrix(3, sM)
    decompositionM = predicted_decomposition(
        cdM, [gram_matrix(AM, cdM, 1)]
    )
    assert decompositionM.size_list() == [3] and decompositionM.lie_dim == 3


def test_predicted_decomposition_refuses_degenerate():
    A, sigma = temperley_lieb(4, 0)
    cd = cell_datum_temperley_lieb(4, sigma)
    grams = [gram_matrix(A, cd, lam) for lam in cd.lambdas]
    with pytest.raises(ValueError, match="degenerate"):
        predicted_decomposition(cd, grams)


# -- the certificate -----------------------------------------------------------


def test_certificate_planar_rook():
    A, sigma = planar_rook(3)
    cd = cell_datum_planar_rook(3, sigma)
    outcome = verify_theorem(A, sigma, cd)
    assert outcome.certified
    assert outcome.lie_dim == 6 == outcome.predicted_lie_dim
    assert [d for _, d in outcome.block_sizes] == [1, 3, 3, 1]


def test_certificate_tl_delta_three():
    A, sigma = temperley_lieb(4, 3)
    cd = cell_datum_temperley_lieb(4, sigma)
    outcome = verify_theorem(A, sigma, cd)
    assert outcome.certified
    assert outcome.lie_dim == 4 == outcome.predicted_lie_dim


def test_refutation_tl_delta_zero():
    A, sigma = temperley_lieb(4, 0)
    cd = cell_datum_temperley_lieb(4, sigma)
    outcome = verify_theorem(A, sigma, cd)
    assert not outcome.certified
    assert outcome.failed_check == "representation_injective"
    assert outcome.skew_ok  # adjointness holds without semisimplicity
    assert outcome.lie_dim == 4 == outcome.predicted_lie_dim


@pytest.mark.parametrize(
    "factory, n, datum_factory",
    [
        (lambda: planar_rook(3), 3, cell_datum_planar_rook),
        (lambda: temperley_lieb(4, 3), 4, cell_datum_temperley_lieb),
        (lambda: matrix_algebra(3), 3, cell_datum_matrix),
    ],
)
def test_bracket_transport_through_cell_representations(factory, n, datum_factory):
    # The combined cell representation must carry the skew-part brackets to
    # matrix commutators block by block, exactly.
    A, sigma = factory()
    cd = datum_factory(n, sigma)
    modules = {lam: cell_module(A, cd, lam) for lam in cd.lambdas}
    basis = [b.coeffs for b in plesken_basis(A, sigma)]
    for x in basis:
        for y in basis:
            z = A.commutator(x, y)
            for lam, module in modules.items():
                rx, ry = module.act(x), module.act(y)
                assert module.act(z) == (rx @ ry) - (ry @ rx)


@pytest.mark.parametrize("delta", ["1/2", "1+1i", "-2/3+1/5i"])
def test_exotic_parameter_consistency(delta):
    # Certificates must track semisimplicity for any exact parameter value,
    # complex ones included.
    A, sigma = temperley_lieb(3, scalar(delta))
    cd = cell_datum_temperley_lieb(3, sigma)
    assert validate_cell_datum(A, sigma, cd) is None
    verdict = is_semisimple(A, cd)
    outcome = verify_theorem(A, sigma, cd)
    assert outcome.certified == verdict.semisimple
    for lam in cd.lambdas:
        assert check_gram_properties(A, sigma, cd, lam) is None


def test_certificate_tl6():
    # One size beyond the acceptance tower: blocks {1, 5, 9, 5}.
    A, sigma = temperley_lieb(6, 3)
    assert A.dim == 132
    cd = cell_datum_temperley_lieb(6, sigma)
    assert validate_cell_datum(A, sigma, cd) is None
    outcome = verify_theorem(A, sigma, cd)
    assert outcome.certified
    assert sorted(d for _, d in outcome.block_sizes) == [1, 5, 5, 9]
    assert outcome.lie_dim == 56


def test_cell_count_identity():
    for n in (1, 2, 3):
        A, sigma = planar_rook(n)
        cd = cell_datum_planar_rook(n, sigma)
        assert sum(len(cd.members(lam)) ** 2 for lam in cd.lambdas) == A.dim
    for n in (2, 3, 4):
        A, sigma = temperley_lieb(n, 3)
        cd = cell_datum_temperley_lieb(n, sigma)
        assert sum(len(cd.members(lam)) ** 2 for lam in cd.lambdas) == A.dim
