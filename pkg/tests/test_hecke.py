from itertools import permutations
import random

import pytest
from hypothesis import given, settings, strategies as st

from toroidal.hecke import HeckeElement, from_word, interval, length, omega, parse_hecke, reduced_word, symmetrizers
from toroidal.scalars import Scalar

q = Scalar.q()


def T(m, i, sign=1):
    return HeckeElement.generator(m, i, sign)


def test_quadratic_relation():
    t = T(2, 1)
    assert t * t == t.scale(q - q ** -1) + HeckeElement.identity(2)


def test_identity_and_inverse():
    x = T(3, 1) * T(3, 2)
    assert HeckeElement.identity(3) * x == x
    assert from_word(2, (1, 1), (-1, 1)) == HeckeElement.identity(2)


def test_braid_words_agree():
    assert from_word(3, (1, 2, 1)) == from_word(3, (2, 1, 2))


def test_interval_is_one_basis_monomial():
    x = interval(4, 1, 3)
    assert x == T(4, 1) * T(4, 2) * T(4, 3)
    assert len(x.terms) == 1


def test_symmetrizers_small():
    S, A = symmetrizers(2)
    assert S == HeckeElement.identity(2) + T(2, 1).scale(q)
    assert A == HeckeElement.identity(2) - T(2, 1).scale(q ** -1)
    S1, A1 = symmetrizers(1)
    assert S1 == A1 == HeckeElement.identity(1)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_omega_of_symmetrizer(m):
    S, A = symmetrizers(m)
    assert omega(S) == A.scale(q ** (m * (m - 1)))


def test_omega_involution():
    x = T(3, 1) * T(3, 2)
    assert omega(omega(x)) == x
    assert omega(HeckeElement.identity(3)) == HeckeElement.identity(3)


def test_symmetrizer_eigenvalues():
    S, A = symmetrizers(3)
    for i in (1, 2):
        assert T(3, i) * S == S.scale(q)
        assert T(3, i) * A == A.scale(-q ** -1)


def test_mismatched_rank():
    with pytest.raises(ValueError):
        T(2, 1) * T(3, 1)


def test_reduced_words():
    for w in permutations(range(1, 5)):
        word = reduced_word(w)
        assert len(word) == length(w)
        assert from_word(4, word) == HeckeElement.basis(w)


def test_print_parse_round_trip():
    x = T(3, 1) * T(3, 2, -1) + T(3, 2).scale(q ** 2 - 1)
    assert parse_hecke(str(x)) == x


@st.composite
def elements(draw, m):
    perms = list(permutations(range(1, m + 1)))
    out = HeckeElement(m)
    for _ in range(draw(st.integers(1, 3))):
        w = draw(st.sampled_from(perms))
        c = Scalar.monomial(draw(st.integers(-2, 2)), 0, draw(st.integers(-3, 3)))
        out = out + HeckeElement.basis(w, c)
    return out


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_associativity_and_distributivity(data):
    m = data.draw(st.integers(1, 4))
    a, b, c = (data.draw(elements(m)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_omega_is_multiplicative(data):
    m = data.draw(st.integers(2, 3))
    a, b = data.draw(elements(m)), data.draw(elements(m))
    assert omega(a * b) == omega(a) * omega(b)


def test_seeded_associativity_fuzz():
    rng = random.Random(7)
    for _ in range(30):
        m = rng.randint(2, 4)
        xs = [from_word(m, [rng.randint(1, m - 1) for _ in range(3)], [rng.choice((1, -1)) for _ in range(3)])
              for _ in range(3)]
        assert (xs[0] * xs[1]) * xs[2] == xs[0] * (xs[1] * xs[2])
