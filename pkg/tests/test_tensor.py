from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from toroidal.scalars import ONE, Scalar
from toroidal.tensor import (
    BoundError,
    TensorSpace,
    VmModule,
    bar,
    check_kac_moody,
    dumps_vector,
    loads_vector,
    split,
    theta_op,
)

q = Scalar.q()


def v(*j, c=ONE):
    return {tuple(j): c}


def test_split_convention():
    assert split(3, 3) == (0, 3)
    assert split(4, 3) == (1, 1)
    assert split(0, 3) == (-1, 3)
    assert bar(-2, 3) == 1


def test_single_slot_action():
    T = TensorSpace(3, 1)
    assert T.e(1, v(2)) == v(1)
    assert T.e(1, v(5)) == v(4)
    assert T.X(1, v(4)) == v(1)


def test_two_slot_action():
    T = TensorSpace(3, 2)
    assert T.e(1, v(2, 2)) == {(1, 2): ONE, (2, 1): ONE}
    assert T.e(1, v(1, 5)) == v(1, 4, c=q)


def test_tau_and_psi():
    T = TensorSpace(3, 2)
    assert T.tau_basis(1, (4, 4)) == v(4, 4, c=q)
    assert T.tau_basis(1, (1, 2)) == v(2, 1, c=q ** -1)
    assert T.psi(v(1, 2)) == v(1, 2, c=q)
    assert T.psi(v(2, 1)) == v(2, 1)


def test_free_basis_single_slot_is_a_shift():
    # for m = 1 the X-action is a pure shift, so v_j is its own free label
    T = TensorSpace(3, 1)
    for j in range(-4, 7):
        assert T.phi_inverse(v(j), bound=2) == v(j)
        assert T.phi(v(j)) == v(j)


@settings(max_examples=30, deadline=None)
@given(st.tuples(st.integers(-3, 6), st.integers(-3, 6)))
def test_free_basis_round_trip(j):
    T = TensorSpace(3, 2)
    assert T.phi(T.phi_inverse(v(*j), bound=2)) == v(*j)


def test_phi_inverse_bound():
    T = TensorSpace(3, 2)
    with pytest.raises(BoundError):
        T.phi_inverse(v(-8, 1), bound=1)


def test_vm_module_values():
    V = VmModule(3, 1, loop=-1)
    assert V.k(3, {((1,), (0,)): ONE}) == {((1,), (0,)): q ** -1}
    V2 = VmModule(3, 2, loop=-1)
    assert V2.Y(1, {((1, 2), (0, 0)): ONE}) == {((1, 2), (-1, 0)): ONE}


def test_theta_operators():
    assert theta_op(3, "e", 1, v(3)) == v(1)
    assert theta_op(3, "k", 1, v(1)) == v(1, c=q)
    assert theta_op(3, "f", 1, v(1, 1)) == v(3, 1, c=q ** -1)


def test_hecke_quadratic_on_tensor():
    T = TensorSpace(3, 2)
    for j in product(range(-2, 5), repeat=2):
        x = T.T(1, v(*j))
        lhs = T.T(1, x)
        rhs = {k: c * (q - q ** -1) for k, c in x.items()}
        for k, c in v(*j).items():
            rhs[k] = rhs.get(k, 0 * ONE) + c
        assert {k: c for k, c in lhs.items() if c} == {k: c for k, c in rhs.items() if c}


def _cartan(n):
    return lambda i, j: 2 if i == j else (-1 if (i - j) % n in (1, n - 1) else 0)


def test_kac_moody_single_slot():
    T = TensorSpace(3, 1)
    vecs = [v(j) for j in range(-3, 7)]
    assert check_kac_moody(T.e, T.f, T.k, range(3), _cartan(3), vecs) == []


def test_broken_operator_is_detected():
    T = TensorSpace(3, 1)
    vecs = [v(j) for j in range(-3, 7)]
    bad_e = lambda i, w: {k: c * q for k, c in T.e(i, w).items()}
    assert check_kac_moody(bad_e, T.f, T.k, range(3), _cartan(3), vecs)


@settings(max_examples=40, deadline=None)
@given(st.tuples(st.integers(-4, 7), st.integers(-4, 7)), st.integers(0, 2), st.sampled_from("ef"))
def test_action_commutes_with_hecke(j, i, name):
    T = TensorSpace(3, 2)
    g = getattr(T, name)
    for h in (lambda w: T.T(1, w), lambda w: T.T(1, w, -1), lambda w: T.Q(w), lambda w: T.X(2, w)):
        assert g(i, h(v(*j))) == h(g(i, v(*j)))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 8), min_size=1, max_size=3), st.integers(-3, 3))
def test_json_round_trip(j, a):
    w = v(*j, c=Scalar.monomial(a, 1, 2))
    assert loads_vector(dumps_vector(3, len(j), w)) == (3, len(j), w, False)
