from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from toroidal.qwedge import (
    EscapeError,
    WedgeSpace,
    degree,
    dumps_wedge,
    loads_wedge,
    pi_projection,
    scale_exponent,
    sector_basis,
    sector_matrix,
    straighten,
    vacuum_tuple,
)
from toroidal.scalars import ONE, Scalar
from toroidal.tensor import check_kac_moody

q = Scalar.q()


def test_projection_examples():
    # coordinates are in the u-basis, u_j = q^s(j) v_j for normally ordered j
    W = WedgeSpace(3, 2)
    assert scale_exponent((5, 2), 3) == -1
    assert W.project({(5, 2): ONE}) == {(5, 2): q}
    assert W.project({(4, 4): ONE}) == {}
    assert W.project({(1, 2): ONE}) == {(2, 1): -ONE}


def test_straighten_free_labels():
    # the free label (1, 2) is q v_(1,2)
    assert straighten(3, (5, 2)) == {(5, 2): ONE}
    assert straighten(3, (4, 4)) == {}
    assert straighten(3, (1, 2)) == {(2, 1): -q}


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 6), min_size=2, max_size=3))
def test_straighten_matches_tensor_route(j):
    W = WedgeSpace(3, len(j))
    assert straighten(3, tuple(j)) == W.project(W.tensor.phi({tuple(j): ONE}))


def test_sector_degree_zero():
    # degree zero pins the levels; the partially filled top block stays free
    for e in range(-2, 4):
        for m in range(e % 3 or 3, 10, 3):
            basis = sector_basis(e, 0, m, 3)
            assert vacuum_tuple(e, m) in basis
            assert len(basis) == comb(3, e % 3 or 3)
            assert all(degree(j, e, 3) == 0 for j in basis)
    assert sector_basis(0, 0, 3, 3) == [(0, -1, -2)]
    assert sector_basis(1, 0, 1, 3) == [(1,), (2,), (3,)]


def test_pi_projection():
    e, m, n = 0, 3, 3
    head = (1, -1, -2)
    assert pi_projection({vacuum_tuple(e, m + n): ONE}, e, m, n) == {vacuum_tuple(e, m): ONE}
    deviated = head + (-3, -4, 0 - 7)
    assert pi_projection({deviated: ONE}, e, m, n) == {}
    with pytest.raises(ValueError):
        pi_projection({head: ONE}, e, m, n)


def test_k_is_diagonal():
    W = WedgeSpace(3, 3)
    src = sector_basis(0, 1, 3, 3)
    for i in range(4):
        M = W.matrix("k", i, src, src)
        assert all(M[r][c] == 0 * ONE for r in range(len(src)) for c in range(len(src)) if r != c)


def test_f_on_empty_preimage_is_zero():
    W = WedgeSpace(3, 3)
    assert W.act("f", 1, {(3, 0, -1): ONE}) == {}


def test_truncated_target_escapes():
    W = WedgeSpace(3, 3)
    src = sector_basis(0, 1, 3, 3)
    with pytest.raises(EscapeError) as info:
        W.matrix("e", 1, src, src[:1])
    assert info.value.args


def test_sector_matrix_widens():
    W = WedgeSpace(3, 6)
    M, src, tgt = sector_matrix(W, "f", 1, 0, 1, window=0)
    assert len(M) == len(tgt) and all(len(row) == len(src) for row in M)


def test_commutator_matches_cartan_on_a_sector():
    W = WedgeSpace(3, 3)
    zero = 0 * ONE
    for j in sector_basis(0, 1, 3, 3):
        for i in (1, 2):
            w = {j: ONE}
            lhs = {}
            for k, c in W.act("e", i, W.act("f", i, w)).items():
                lhs[k] = lhs.get(k, zero) + c
            for k, c in W.act("f", i, W.act("e", i, w)).items():
                lhs[k] = lhs.get(k, zero) - c
            rhs = {}
            for k, c in W.act("k", i, w, 1).items():
                rhs[k] = rhs.get(k, zero) + c / (q - q ** -1)
            for k, c in W.act("k", i, w, -1).items():
                rhs[k] = rhs.get(k, zero) - c / (q - q ** -1)
            assert {k: c for k, c in lhs.items() if c} == {k: c for k, c in rhs.items() if c}


def test_kac_moody_relations_on_wedges():
    W = WedgeSpace(3, 2)
    vecs = [{j: ONE} for k in range(3) for e in (-1, 2) for j in sector_basis(e, k, 2, 3)]
    act = lambda name: (lambda i, w, power=1: W.act(name, i, w, power) if name == "k" else W.act(name, i, w))
    cartan = lambda i, j: 2 if i == j else (-1 if (i - j) % 3 in (1, 2) else 0)
    assert check_kac_moody(act("e"), act("f"), act("k"), range(3), cartan, vecs) == []


def test_json_round_trip():
    w = {(5, 2): q, (4, 1): ONE - q}
    assert loads_wedge(dumps_wedge(3, 2, 0, w)) == (3, 2, 0, w)
    # non-normally-ordered input is straightened on load
    _, _, _, x = loads_wedge('{"n": 3, "m": 2, "terms": [{"coeff": "1", "index": [1, 2]}]}')
    assert x == {(2, 1): -q}
