from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dkpstrata.linalg import bareiss_det, identity, mat_mul
from dkpstrata.rootdata import (
    RootDataError,
    pair,
    parse_type,
    positive_roots,
    reflect_root,
    reflection_matrix,
    root_system,
)

ALL_TYPES = [("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)] + \
    [("C", n) for n in range(3, 9)] + [("D", n) for n in range(4, 9)] + \
    [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]

# |Delta_+| for each series
POS_ROOTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
             "D": lambda n: n * (n - 1), "E": {6: 36, 7: 63, 8: 120}.get,
             "F": lambda n: 24, "G": lambda n: 6}


def test_rank_one_and_two_data():
    a1 = root_system("A", 1)
    assert a1.cartan == ((2,),) and a1.symmetrizers == (1,)
    a2 = root_system("A", 2)
    assert a2.cartan == ((2, -1), (-1, 2)) and a2.symmetrizers == (1, 1)
    g2 = root_system("G", 2)
    assert g2.symmetrizers == (1, 3)
    assert g2.cartan == ((2, -3), (-1, 2))
    b2 = root_system("B", 2)
    assert b2.symmetrizers == (2, 1)
    assert b2.cartan == ((2, -1), (-2, 2))


@pytest.mark.parametrize("series,rank", [("G", 3), ("E", 5), ("A", 9), ("B", 1), ("D", 3), ("F", 2)])
def test_rank_out_of_range(series, rank):
    with pytest.raises(RootDataError):
        root_system(series, rank)


def test_unknown_series():
    with pytest.raises(RootDataError):
        root_system("H", 3)
    with pytest.raises(RootDataError):
        parse_type("Q2")


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_type_invariants(series, rank):
    rs = root_system(series, rank)
    c, d = rs.cartan, rs.symmetrizers
    for i in range(rank):
        assert c[i][i] == 2
        for j in range(rank):
            if i != j:
                assert c[i][j] <= 0
            assert d[i] * c[i][j] == d[j] * c[j][i]
    from math import gcd
    g = 0
    for x in d:
        g = gcd(g, x)
    assert g == 1
    # gram entries have denominators dividing det(C)
    det = bareiss_det(c)
    assert det > 0
    for row in rs.gram:
        for x in row:
            assert det % x.denominator == 0
    # short roots have square length 2
    assert min(pair(rs, rs.simple_root_weight(i), rs.simple_root_weight(i)) for i in range(rank)) == 2


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_pairing_with_simple_roots(series, rank):
    rs = root_system(series, rank)
    for i in range(rank):
        omega = tuple(int(k == i) for k in range(rank))
        for j in range(rank):
            assert pair(rs, omega, rs.simple_root_weight(j)) == (rs.symmetrizers[j] if i == j else 0)


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_pair_bilinear_symmetric_b3(lam, mu):
    rs = root_system("B", 3)
    assert pair(rs, lam, mu) == pair(rs, mu, lam)
    for i in range(3):
        assert pair(rs, lam, rs.simple_root_weight(i)) == rs.symmetrizers[i] * lam[i]
    double = [2 * x for x in lam]
    assert pair(rs, double, mu) == 2 * pair(rs, lam, mu)


def test_pair_examples():
    a2 = root_system("A", 2)
    assert pair(a2, (2, -1), (2, -1)) == 2  # <alpha_1, alpha_1>
    assert pair(a2, (1, 0), (1, 0)) == Fraction(2, 3)
    assert pair(a2, (0, 0), (3, 7)) == 0
    with pytest.raises(RootDataError):
        pair(a2, (1,), (1, 0))


def test_positive_roots_small():
    assert positive_roots(root_system("A", 1)) == ((1,),)
    assert set(positive_roots(root_system("A", 2))) == {(1, 0), (0, 1), (1, 1)}
    assert positive_roots(root_system("A", 2)) == ((1, 0), (0, 1), (1, 1))
    assert len(positive_roots(root_system("G", 2))) == 6
    assert len(positive_roots(root_system("B", 2))) == 4


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_positive_root_counts_and_closure(series, rank):
    rs = root_system(series, rank)
    roots = positive_roots(rs)
    assert len(roots) == POS_ROOTS[series](rank)
    assert len(set(roots)) == len(roots)
    listed = set(roots)
    for beta in roots:
        assert all(x >= 0 for x in beta)
        for i in range(rank):
            image = reflect_root(rs, i, beta)
            assert image in listed or tuple(-x for x in image) in listed


def test_reflection_matrix_examples():
    a2 = root_system("A", 2)
    assert reflection_matrix(a2, 1) == ((-1, 0), (1, 1))
    assert reflection_matrix(a2, 2) == ((1, 1), (0, -1))
    assert reflection_matrix(root_system("A", 1), 1) == ((-1,),)
    with pytest.raises(RootDataError):
        reflection_matrix(a2, 3)


COXETER_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


def _order(m, n):
    ident = identity(n)
    p, k = m, 1
    while p != ident:
        p = mat_mul(p, m)
        k += 1
    return k


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_reflection_relations(series, rank):
    rs = root_system(series, rank)
    mats = [reflection_matrix(rs, i) for i in range(1, rank + 1)]
    for i, mi in enumerate(mats):
        assert mat_mul(mi, mi) == identity(rank)
        assert bareiss_det(mi) == -1
        for j, mj in enumerate(mats):
            if i < j:
                prod = rs.cartan[i][j] * rs.cartan[j][i]
                assert _order(mat_mul(mi, mj), rank) == COXETER_ORDER[prod]


def test_root_weight_round_trip():
    rs = root_system("F", 4)
    for beta in positive_roots(rs):
        assert rs.weight_to_root(rs.root_to_weight(beta)) == beta
    with pytest.raises(RootDataError):
        root_system("A", 2).weight_to_root((1, 0))
