import pytest
from hypothesis import given, settings, strategies as st

from toroidal.cherednik import (
    LaurentPoly,
    PolynomialRep,
    central_value,
    check_daha_relations,
    format_word,
    invert_word,
    parse_poly,
    parse_word,
)
from toroidal.expr import ParseError
from toroidal.scalars import ONE, Scalar, specialize

q, u = Scalar.q(), Scalar.u()
p = u ** 3


def mono(*e):
    return LaurentPoly.monomial(e)


def test_elementary_operators():
    R = PolynomialRep(2)
    assert R.shift(1, mono(2, 0)) == mono(2, 0) * p ** 2
    assert R.swap(1, 2, mono(1, 1)) == mono(1, 1)
    assert R.y(1, LaurentPoly.one(2)) == mono(-1, 0)


def test_t_operator_values():
    R = PolynomialRep(2)
    assert R.t(1, 2, LaurentPoly.one(2)) == LaurentPoly.one(2) * q
    assert R.t(1, 2, mono(1, 0)) == mono(0, 1) * q ** -1


def test_quadratic_relation_on_monomial():
    R = PolynomialRep(2)
    f = mono(3, 1)
    g = R.t(1, 2, f)
    assert (R.t(1, 2, g) - g * (q - q ** -1) - f).is_zero()


def test_x_word_on_one():
    # the t^-1 tail acts on 1 by q^-1, the trivial-module eigenvalue q^(2i-m-1)
    R = PolynomialRep(2)
    assert R.X(1, LaurentPoly.one(2)) == LaurentPoly.one(2) * q ** -1
    assert R.X(2, LaurentPoly.one(2)) == LaurentPoly.one(2) * q


def test_x_degenerates_to_shift_for_one_variable():
    R = PolynomialRep(1)
    f = mono(3)
    assert R.X(1, f) == R.shift(1, f)


def test_q_operator():
    R = PolynomialRep(2)
    assert R.Q(mono(0, 1)) == mono(1, 0) * p
    assert R.Q(LaurentPoly.one(2)) == LaurentPoly.one(2)


def test_central_value():
    assert central_value(3) == p ** -1
    assert central_value(3, loop=-1) == p


@st.composite
def polys(draw, m):
    f = LaurentPoly(m)
    for _ in range(draw(st.integers(1, 3))):
        e = tuple(draw(st.integers(-2, 2)) for _ in range(m))
        f = f + mono(*e) * Scalar.monomial(draw(st.integers(-1, 1)), 0, draw(st.integers(1, 3)))
    return f


@settings(max_examples=25, deadline=None)
@given(polys(3))
def test_x_operators_commute_and_invert(f):
    R = PolynomialRep(3)
    assert R.X(1, R.X(2, f)) == R.X(2, R.X(1, f))
    assert R.X(2, R.X(2, f, -1)) == f
    assert R.Q(R.Q(f, -1)) == f


@settings(max_examples=25, deadline=None)
@given(polys(3))
def test_x_matches_construction_through_q(f):
    R = PolynomialRep(3)
    for i in (1, 2, 3):
        assert R.X(i, f) == R.x_via_q(i, f)


@settings(max_examples=15, deadline=None)
@given(polys(2))
def test_hat_x_classical_limit(f):
    R = PolynomialRep(2)
    for l in (1, 2):
        lhs, rhs = R.hat_x(l, f), R.shift(l, f)
        keys = set(lhs.terms) | set(rhs.terms)
        zero = 0 * ONE
        for k in keys:
            assert specialize(lhs.terms.get(k, zero), 1, 2) == specialize(rhs.terms.get(k, zero), 1, 2)


def test_daha_relations_pass():
    assert check_daha_relations(2, 1).ok


def test_corrupted_t_fails_with_witness():
    rep = check_daha_relations(2, 1, corrupt=True)
    assert not rep.ok
    bad = [line for line in rep.lines() if line.startswith("FAIL quadratic")]
    assert bad and "witness" in bad[0]


def test_literal_central_value_fails():
    assert not check_daha_relations(2, 1, central=p).ok


def test_word_round_trip_and_inverse():
    R = PolynomialRep(3)
    word = parse_word("t(1,2) D(3) s(2,3) t-(2,3)", 3)
    assert parse_word(format_word(word), 3) == word
    f = parse_poly("z1^2*z3^-1 + q*z2", 3)
    assert R.apply_word(invert_word(word), R.apply_word(word, f)) == f


@pytest.mark.parametrize("bad", ["t(1)", "s(1,1)", "D(4)", "x(1)", "t(1,2"])
def test_bad_words(bad):
    with pytest.raises(ParseError):
        parse_word(bad, 3)
