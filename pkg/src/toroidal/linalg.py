"""Exact sparse linear algebra over the scalar field.

Vectors are dicts ``{column: Scalar}``.  :class:`Echelon` keeps a reduced
row-echelon basis of the span of the inserted vectors and remembers how each
basis row was built, so it can also express a vector in terms of the
inserted ones.

>>> from toroidal.scalars import Scalar
>>> q = Scalar.q()
>>> e = Echelon()
>>> e.insert({"a": q, "b": 1}, tag=0)
True
>>> e.insert({"a": q * q, "b": q}, tag=1)
False
>>> e.rank
1
"""
from .scalars import ONE, as_scalar
from .sparse import axpy

__all__ = ["Echelon", "rank", "solve", "kernel", "SolveError"]


class SolveError(ValueError):
    pass


def _cost(c):
    """Pivot preference: Laurent monomials first, then short entries."""
    return (c.den is not None, len(c.num) + (len(c.den) if c.den else 0))


class Echelon:
    def __init__(self, track=False):
        self.rows = {}  # pivot column -> (row, combination)
        self.track = track
        self.order = []

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec, combo=None):
        vec = dict(vec)
        combo = dict(combo) if combo is not None else None
        for col in [c for c in vec if c in self.rows]:
            c = vec.get(col)
            if not c:
                continue
            row, rcombo = self.rows[col]
            axpy(vec, row, -c)
            if combo is not None:
                axpy(combo, rcombo, -c)
        return vec, combo

    def insert(self, vec, tag=None):
        """Add ``vec``; return True if it was independent of the span."""
        combo = {tag: ONE} if self.track else None
        vec, combo = self.reduce({k: as_scalar(v) for k, v in vec.items()}, combo)
        if not vec:
            return False
        col = min(vec, key=lambda k: _cost(vec[k]))
        inv = vec[col].inverse()
        vec = {k: v * inv for k, v in vec.items()}
        if combo is not None:
            combo = {k: v * inv for k, v in combo.items()}
        for pcol, (row, rcombo) in list(self.rows.items()):
            c = row.get(col)
            if c:
                row = dict(row)
                axpy(row, vec, -c)
                if combo is not None:
                    rcombo = dict(rcombo)
                    axpy(rcombo, combo, -c)
                self.rows[pcol] = (row, rcombo)
        self.rows[col] = (vec, combo)
        self.order.append(col)
        return True

    def contains(self, vec):
        return not self.reduce(vec)[0]

    def express(self, vec):
        """Coefficients ``{tag: Scalar}`` with ``vec = sum c * inserted[tag]``."""
        if not self.track:
            raise ValueError("Echelon built without tracking")
        out = {}
        rest = dict(vec)
        for col in [c for c in rest if c in self.rows]:
            c = rest.get(col)
            if not c:
                continue
            row, combo = self.rows[col]
            axpy(rest, row, -c)
            axpy(out, combo, c)
        if rest:
            raise SolveError("vector is not in the span")
        return out


def rank(vectors):
    e = Echelon()
    for v in vectors:
        e.insert(v)
    return e.rank


def solve(columns, target):
    """Find ``{tag: c}`` with ``sum c * columns[tag] == target``.

    ``columns`` maps tags to vectors; they are assumed independent.
    """
    e = Echelon(track=True)
    for tag, v in columns.items():
        e.insert(v, tag)
    return e.express(target)


def kernel(columns):
    """Basis of ``{c : sum c[tag] * columns[tag] = 0}`` as dicts over tags."""
    e = Echelon(track=True)
    out = []
    for tag, v in columns.items():
        rest, combo = e.reduce(v, {tag: ONE})
        if rest:
            e.insert(v, tag)
        else:
            out.append(combo)
    return out
