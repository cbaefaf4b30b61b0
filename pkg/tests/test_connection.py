from fractions import Fraction as F

import pytest

from dwork_hgm.algebra import Polynomial, RationalFunction, RFMatrix, char_poly, constant_rank, rational_roots
from dwork_hgm.connection import (
    RegularizedSystem,
    change_variable,
    companion_system,
    connection_block,
    cyclic_change_of_basis,
    infinity_system,
    is_companion,
    regularize,
    residue_infinity,
    residue_one,
    residue_zero,
    run_pipeline,
    system_matrix,
)
from dwork_hgm.dwork import distinct_orbits, reduce
from dwork_hgm.errors import (
    CyclicVectorFailure,
    HigherOrderPole,
    NotCompanionForm,
    NotPowerCompatible,
    StillSingular,
)

from conftest import golden_matrix

L = RationalFunction.x()
W = (1, 1, 1, 2, 2, 5)


@pytest.fixture(scope="module")
def pipe():
    return run_pipeline(W)


def test_block_matches_worked_example(pipe, section6):
    assert pipe.block.basis == tuple(tuple(b) for b in section6["orbit"])
    assert connection_block(W).mat == golden_matrix(section6["connection_block"])


def test_system_is_transpose(pipe, section6):
    assert pipe.system == golden_matrix(section6["system"])
    assert system_matrix(pipe.block).transpose() == pipe.block.mat


def test_change_of_basis(pipe, section6):
    s = golden_matrix(section6["change_of_basis"])
    assert pipe.cob == s
    assert s.row(1) == pipe.system.row(0)


def test_companion(pipe, section6):
    assert pipe.companion == golden_matrix(section6["companion"])
    assert is_companion(pipe.companion)


def test_regularized_sign_of_last_diagonal_entry(pipe, section6):
    printed = golden_matrix(section6["regularized_as_printed"])
    ours = pipe.regularized.N
    # all entries but (3,3) agree with the printed matrix
    for i in range(3):
        for j in range(3):
            if (i, j) != (2, 2):
                assert ours[i, j] == printed[i, j]
    # the reference "2 - ..." contradicts the reference z-matrix; "2 + ..." is consistent
    assert ours[2, 2] == 2 + (7 * L**6 + 2) / (1 - L**6)
    assert ours[2, 2] != printed[2, 2]
    assert (ours[2, 2].substitute_power(6) * F(1, 6)) == golden_matrix(section6["z_system"])[2, 2]


def test_z_system(pipe, section6):
    assert pipe.zsystem.var == "z"
    assert pipe.zsystem.N == golden_matrix(section6["z_system"])


def test_residues(pipe, section6):
    assert pipe.res_zero == golden_matrix(section6["residue_zero"])
    assert pipe.res_infinity == golden_matrix(section6["residue_infinity"])
    assert pipe.res_one == RFMatrix([[0, 0, 0], [0, 0, 0], [F(-1, 3), F(-4, 3), F(-3, 2)]])
    zeta = infinity_system(pipe.zsystem)
    assert zeta.N == golden_matrix(section6["infinity_system"])
    assert residue_zero(zeta) == pipe.res_infinity


def test_residue_eigenvalues(pipe):
    assert rational_roots(char_poly(pipe.res_zero)) == [0, F(1, 3), F(1, 2)]
    assert rational_roots(char_poly(pipe.res_infinity)) == [F(1, 6), F(1, 6), F(1, 3)]


def test_singleton_orbit_block():
    w = (5, 4, 3, 3, 2, 1)
    block = connection_block(w)
    # oracle: the single coefficient of the reduced derivative
    expected = reduce(-6, tuple(e + 1 for e in w))
    assert set(expected) == {w}
    assert block.mat == RFMatrix([[expected[w]]])
    assert system_matrix(block) == block.mat
    s = cyclic_change_of_basis(block.mat)
    assert s == RFMatrix.identity(1)
    assert companion_system(block.mat, s) == block.mat


def test_direct_images_get_minus_n():
    block = connection_block(W)
    assert block.mat[2, 1] == -6


def test_constant_residue_at_infinity_negates():
    r = RegularizedSystem(RFMatrix([[F(2, 7), 0], [0, F(2, 7)]]), "z", 7)
    assert residue_infinity(r) == RFMatrix([[F(-2, 7), 0], [0, F(-2, 7)]])
    assert change_variable(RegularizedSystem(RFMatrix([[3]]), "lambda", 3)).N == RFMatrix([[1]])


def test_cyclic_vector_failure():
    with pytest.raises(CyclicVectorFailure):
        cyclic_change_of_basis(RFMatrix([[1, 0], [0, 2]]))


def test_regularize_rejects_non_companion():
    with pytest.raises(NotCompanionForm):
        regularize(RFMatrix([[1, 1], [0, 0]]), 2)


def test_regularize_detects_irregular_pole():
    with pytest.raises(StillSingular):
        regularize(RFMatrix([[0, 1], [1 / L**4, 0]]), 2)


def test_change_variable_requires_power_compatibility():
    r = RegularizedSystem(RFMatrix([[L]]), "lambda", 3)
    with pytest.raises(NotPowerCompatible):
        change_variable(r)


def test_residue_one_rejects_double_pole():
    z = RationalFunction.x()
    r = RegularizedSystem(RFMatrix([[1 / (1 - z) ** 2]]), "z", 2)
    with pytest.raises(HigherOrderPole):
        residue_one(r)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_structural_properties_small_n(n):
    for o in distinct_orbits(n):
        p = run_pipeline(o[0])
        k = len(o)
        assert is_companion(p.companion)
        assert p.res_zero + p.res_one + p.res_infinity == RFMatrix.zeros(k, k)
        assert all(p.res_zero[i, 0] == 0 for i in range(k))
        assert all(p.res_one[i, j] == 0 for i in range(k - 1) for j in range(k))
        if k >= 2:
            assert constant_rank(p.res_one.constant_entries()) == 1
        assert 0 in rational_roots(char_poly(p.res_zero))
        traces = p.res_zero.trace() + p.res_one.trace() + p.res_infinity.trace()
        assert traces == 0
