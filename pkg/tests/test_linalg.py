import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.polys.matrices import DomainMatrix

from toroidal.linalg import Echelon, SolveError, kernel, rank, solve
from toroidal.scalars import ONE, Scalar
from toroidal.sparse import axpy

from conftest import laurent_scalars

qs, us = sympy.symbols("q u")
FIELD = sympy.QQ.frac_field(qs, us)


def to_sympy(c):
    return sympy.sympify(str(c).replace("^", "**"), locals={"q": qs, "u": us})


def oracle_rank(rows, cols):
    data = [[to_sympy(r.get(c, 0 * ONE)) for c in cols] for r in rows]
    return DomainMatrix.from_list_sympy(len(rows), len(cols), data).convert_to(FIELD).rank()


matrices = st.integers(1, 4).flatmap(
    lambda r: st.lists(st.lists(laurent_scalars(max_terms=2, span=2), min_size=3, max_size=3), min_size=r, max_size=r)
)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_rank_against_sympy(rows):
    vecs = [{c: x for c, x in enumerate(r) if x} for r in rows]
    assert rank(vecs) == oracle_rank(vecs, range(3))


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_kernel_vectors_annihilate(rows):
    columns = {i: {c: x for c, x in enumerate(r) if x} for i, r in enumerate(rows)}
    ker = kernel(columns)
    assert len(ker) == len(rows) - rank(columns.values())
    for combo in ker:
        total = {}
        for tag, c in combo.items():
            axpy(total, columns[tag], c)
        assert not total


def test_solve_and_express():
    q = Scalar.q()
    cols = {"x": {0: ONE, 1: q}, "y": {1: ONE}}
    target = {0: q, 1: q * q + 2}
    assert solve(cols, target) == {"x": q, "y": 2 * ONE}
    with pytest.raises(SolveError):
        solve(cols, {2: ONE})


def test_contains_and_untracked_express():
    e = Echelon()
    e.insert({0: ONE, 1: ONE})
    assert e.contains({0: 3 * ONE, 1: 3 * ONE})
    assert not e.contains({0: ONE})
    with pytest.raises(ValueError):
        e.express({0: ONE})
