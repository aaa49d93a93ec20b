import pytest
from hypothesis import given, settings, strategies as st

from toroidal.expr import ParseError
from toroidal.scalars import ONE, Scalar
from toroidal.torus import (
    CyclicPairs,
    DiffOperators,
    MatrixAlgebra,
    QuantumTorus,
    check_toroidal_relations,
    format_torus_matrix,
    generator_degree,
    image_degrees,
    matrix_bigrade,
    parse_torus_element,
    parse_torus_matrix,
    pi_image,
    surjectivity_witness,
    twist_matrix,
    witness_target,
)

u = Scalar.u()
A = QuantumTorus(3)
M = MatrixAlgebra(A, 3)


def test_commutation_rule():
    assert A.mul(A.D(), A.z()) == {(1, 1): u ** 3}
    zD = A.mul(A.z(), A.D())
    assert A.mul(zD, zD) == {(2, 2): u ** 3}
    assert A.mul(A.one(), zD) == zD


def test_differential_commutation():
    B = DiffOperators()
    assert B.mul(B.d(), B.z()) == {(1, 1): 1, (1, 0): 1}


def test_matrix_bracket_and_sl():
    B = M.bracket(M.elementary(1, 2), M.elementary(2, 1))
    assert B == M.sub(M.elementary(1, 1), M.elementary(2, 2))
    assert M.is_sl(B)
    assert M.is_sl(M.elementary(1, 1, A.mul(A.z(), A.D())))
    assert not M.is_sl(M.elementary(1, 1))


def test_bigrading_examples():
    assert matrix_bigrade(3, M.elementary(1, 2, A.monomial(1, -2))) == (2, (1, 2, 1))
    assert matrix_bigrade(3, M.elementary(2, 2, A.monomial(3, -1))) == (1, (3, 3, 3))
    with pytest.raises(ValueError):
        matrix_bigrade(3, M.add(M.elementary(1, 2), M.elementary(2, 1)))


@pytest.mark.parametrize("n", [3, 4])
def test_pi_is_graded(n):
    for tag in "efh":
        for i in range(n):
            for k in range(-2, 3):
                assert image_degrees(n, pi_image(tag, i, k, n)) == {generator_degree(n, tag, i, k)}


def test_relations_hold_and_control_fails():
    count, bad = check_toroidal_relations(3, 1)
    assert count > 0 and bad == []
    twisted = [list(r) for r in zip(*twist_matrix(3))]
    _, bad = check_toroidal_relations(3, 1, twist=twisted, stop_first=True)
    assert bad


def test_witness_errors():
    with pytest.raises(ValueError):
        surjectivity_witness(3, 1, 1, 0, 0)
    with pytest.raises(ValueError):
        surjectivity_witness(3, 4, 1, 0, 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(-2, 2), st.integers(-2, 2))
def test_witnesses_evaluate_to_target(a, b, k, l):
    if a == b and (k, l) == (0, 0):
        return
    assert surjectivity_witness(3, a, b, k, l).evaluate(3) == witness_target(3, a, b, k, l)


def test_parse_and_format():
    X = parse_torus_matrix("E12*z - u^2*E21*z^-1*D^2", 3)
    assert X == M.add(M.elementary(1, 2, A.z()), M.elementary(2, 1, A.monomial(-1, 2, -u ** 2)))
    assert parse_torus_matrix(format_torus_matrix(X, 3), 3) == X
    assert parse_torus_element("3*z^2*D^-1 + u", 3) == {(2, -1): 3 * ONE, (0, 0): u}
    assert format_torus_matrix({}, 3) == "0"
    with pytest.raises(ParseError):
        parse_torus_matrix("E12*w", 3)
    with pytest.raises(ParseError):
        parse_torus_element("E12", 3)


def test_bracket_example():
    X = M.bracket(parse_torus_matrix("E12*z", 3), parse_torus_matrix("E21*D", 3))
    assert format_torus_matrix(X, 3) == "(1) * E1_1 * z^1 * D^1 + (-u^3) * E2_2 * z^1 * D^1"


def test_cyclic_pairs():
    C = CyclicPairs(3, 1)
    f, g, h = A.z(), A.D(), A.monomial(-1, 0)
    sym = C.pair(f, g)
    for key, c in C.pair(g, f).items():
        sym[key] = sym.get(key, 0 * ONE) + c
    assert C.is_zero(sym)
    assert not C.is_zero(C.pair(f, g))
    with pytest.raises(OverflowError):
        C.pair(A.z(2), g)
    # the commutator is well defined on the quotient
    assert C.commutator(C.pair(f, g)) == A.bracket(f, g)
    three = C.pair(A.mul(f, g), h)
    for key, c in C.pair(f, A.mul(g, h)).items():
        three[key] = three.get(key, 0 * ONE) - c
    for key, c in C.pair(g, A.mul(h, f)).items():
        three[key] = three.get(key, 0 * ONE) - c
    assert C.is_zero(three)
