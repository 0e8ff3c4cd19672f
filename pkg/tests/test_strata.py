from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dkpstrata.linalg import content, mat_add, mat_mul, mat_vec
from dkpstrata.rootdata import root_system
from dkpstrata.strata import (
    StrataError,
    commutation_exponent,
    double_bruhat_stratum_dim,
    eigenspace_dim,
    kernel_lattice_basis,
    normal_element_weight,
    stratification_report,
    stratum_dimension,
)
from dkpstrata.weyl import all_elements, bruhat_leq, element_from_word, identity_element, longest_element
from oracles import eigendim, minus_one_eigendim_2x2, plus_one_eigendim_2x2

A1 = root_system("A", 1)
A2 = root_system("A", 2)
W0 = element_from_word(A2, [1, 2, 1])


def el(*word, rs=A2):
    return element_from_word(rs, word)


# Frozen from the characteristic-polynomial oracle, see test_a2_table_matches_oracle.
A2_W0_STRATA = {(): 1, (1,): 0, (2,): 0, (1, 2): 1, (2, 1): 1, (1, 2, 1): 0}
A2_S1S2_STRATA = {(): 0, (1,): 1, (2,): 1, (1, 2): 0}


def test_eigenspace_examples():
    assert eigenspace_dim(identity_element(A2), -1) == 0
    assert eigenspace_dim(W0, -1) == 1
    assert eigenspace_dim(el(1, 2), -1) == 0


def test_stratum_dimension_examples():
    s = el(1, rs=A1)
    assert stratum_dimension(A1, s, identity_element(A1)) == 1
    assert stratum_dimension(A2, W0, el(1)) == 0
    for w in all_elements(A2):
        assert stratum_dimension(A2, w, w) == 0


def test_stratum_dimension_requires_bruhat():
    with pytest.raises(StrataError):
        stratum_dimension(A2, el(1), el(2))


def test_a2_table_matches_oracle():
    for w, frozen in ((W0, A2_W0_STRATA), (el(1, 2), A2_S1S2_STRATA)):
        winv = w.inverse()
        for y_word, dim in frozen.items():
            x = winv * el(*y_word)
            assert minus_one_eigendim_2x2(x.matrix) == dim
            assert stratum_dimension(A2, w, el(*y_word)) == dim


def test_report_a2_longest():
    rows = stratification_report(A2, W0)
    assert [r.y.word for r in rows] == [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]
    assert {r.y.word: r.stratum_dim for r in rows} == A2_W0_STRATA
    assert [r.richardson_dim for r in rows] == [3, 2, 2, 1, 1, 0]
    assert [r.leaf_dim for r in rows] == [2, 2, 2, 0, 0, 0]


def test_report_a2_coxeter():
    rows = stratification_report(A2, el(1, 2))
    assert {r.y.word: r.stratum_dim for r in rows} == A2_S1S2_STRATA


def test_report_identity():
    rows = stratification_report(A2, identity_element(A2))
    assert len(rows) == 1
    r = rows[0]
    assert (r.y.word, r.stratum_dim, r.richardson_dim, r.leaf_dim) == ((), 0, 0, 0)


def test_kernel_lattice_examples():
    assert kernel_lattice_basis(A2, identity_element(A2), W0) == [(1, 1)]
    assert kernel_lattice_basis(A2, identity_element(A2), identity_element(A2)) == []
    assert kernel_lattice_basis(A1, identity_element(A1), el(1, rs=A1)) == [(1,)]


def test_commutation_exponent_examples():
    assert commutation_exponent(A2, el(1), W0, (1, 0), (1, 0), (1, 0)) == Fraction(1, 3)
    s = el(1, rs=A1)
    assert commutation_exponent(A1, identity_element(A1), s, (1,), (1,), (1,)) == 0
    with pytest.raises(StrataError):
        commutation_exponent(A2, el(1), W0, (1,), (1, 0), (1, 0))


def test_normal_element_weight_examples():
    assert normal_element_weight(A2, identity_element(A2), (3, -1)) == (6, -2)
    assert normal_element_weight(A2, el(1), (1, 0)) == (-2, 2)
    assert normal_element_weight(A2, W0, (0, 0)) == (0, 0)


def test_double_bruhat_examples():
    assert double_bruhat_stratum_dim(A2, identity_element(A2), W0) == 1
    assert double_bruhat_stratum_dim(A2, identity_element(A2), el(1, 2)) == 0
    for w in all_elements(A2):
        assert double_bruhat_stratum_dim(A2, w, w) == 2
    for y in all_elements(A2):
        for w in all_elements(A2):
            x = w.inverse() * y
            assert double_bruhat_stratum_dim(A2, y, w) == plus_one_eigendim_2x2(x.matrix)


EXHAUSTIVE = ["A1", "A2", "A3", "B2", "B3", "G2"]


@pytest.mark.parametrize("name", EXHAUSTIVE)
def test_stratum_properties_exhaustive(name):
    rs = root_system(name[0], int(name[1:]))
    els = all_elements(rs)
    for w in els:
        for y in els:
            if not bruhat_leq(y, w):
                continue
            dim = stratum_dimension(rs, w, y)
            assert dim == eigendim((w.inverse() * y).matrix, -1)
            rich = w.length - y.length
            assert (rich - dim) % 2 == 0 and rich - dim >= 0
            basis = kernel_lattice_basis(rs, y, w)
            assert len(basis) == dim
            n = mat_add(y.matrix, w.matrix)
            for lam in basis:
                assert mat_vec(n, lam) == (0,) * rs.rank
                assert content(lam) == 1
            images = {normal_element_weight(rs, y, lam) for lam in basis}
            assert len(images) == len(basis)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "B3"])
def test_plus_minus_eigenspaces(name):
    rs = root_system(name[0], int(name[1:]))
    for x in all_elements(rs):
        plus, minus = eigenspace_dim(x, 1), eigenspace_dim(x, -1)
        assert plus + minus <= rs.rank
        involution = mat_mul(x.matrix, x.matrix) == tuple(
            tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
        assert (plus + minus == rs.rank) == involution


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_lattice_vectors_commute(data):
    rs = root_system("B", 3)
    els = all_elements(rs)
    w = data.draw(st.sampled_from(els))
    y = data.draw(st.sampled_from(els))
    vec = st.lists(st.integers(-3, 3), min_size=3, max_size=3)
    mu, nu = data.draw(vec), data.draw(vec)
    for lam in kernel_lattice_basis(rs, y, w):
        assert commutation_exponent(rs, y, w, lam, mu, nu) == 0


def test_commutation_denominators_divide_det():
    rs = root_system("G", 2)
    w = longest_element(rs)
    det = rs.det_cartan
    for y in all_elements(rs):
        for lam in ((1, 0), (0, 1), (2, -1)):
            val = commutation_exponent(rs, y, w, lam, (1, 1), (0, -1))
            assert det % val.denominator == 0
