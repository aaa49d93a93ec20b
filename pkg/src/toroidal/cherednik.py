"""Polynomial representation of the double affine Hecke algebra.

Operators act on Laurent polynomials in ``z_1..z_m`` with :class:`Scalar`
coefficients.  A polynomial is stored as ``{exponent tuple: Scalar}``;
:class:`LaurentPoly` wraps that dict with arithmetic, parsing and printing.

Operator words are lists of factors read as a product: the rightmost
factor acts first.  Factor tags::

    ("s", i, j)       swap z_i and z_j
    ("D", i, e)       z_i -> p^e z_i
    ("t", i, j, e)    t_{i,j}^e, e = +-1
    ("y", i, e)       multiply by z_i^{-e}
    ("mul", f)        multiply by the polynomial f
    ("c", c)          multiply by the scalar c

>>> rep = PolynomialRep(2)
>>> print(rep.t(1, 2, LaurentPoly.one(2)))
q
>>> print(rep.t(1, 2, LaurentPoly.variable(2, 1)))
q^-1*z2
"""
from functools import lru_cache
import re

from .expr import ParseError, parse_expression
from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "LaurentPoly",
    "PolynomialRep",
    "parse_poly",
    "parse_word",
    "format_word",
    "box_monomials",
    "RelationReport",
    "daha_relations",
    "check_daha_relations",
    "ExactnessError",
    "central_value",
    "invert_word",
    "divide_by_difference",
]

Q = Scalar.q()
QI = Q ** -1
QQ = Q - QI


class ExactnessError(AssertionError):
    """Polynomial division left a remainder (an internal bug)."""


def _add_into(acc, key, c):
    v = acc.get(key)
    if v is None:
        acc[key] = c
    else:
        v = v + c
        if v:
            acc[key] = v
        else:
            del acc[key]


def _combine(a, b, cb=ONE):
    out = dict(a)
    for k, v in b.items():
        _add_into(out, k, v * cb if cb is not ONE else v)
    return out


def _scale(a, c):
    if not c:
        return {}
    if c == ONE:
        return dict(a)
    return {k: v * c for k, v in a.items()}


class LaurentPoly:
    """Laurent polynomial in ``z_1..z_m`` with exact scalar coefficients."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def one(cls, m):
        return cls(m, {(0,) * m: ONE})

    @classmethod
    def monomial(cls, exps, c=ONE):
        return cls(len(exps), {tuple(exps): as_scalar(c)})

    @classmethod
    def variable(cls, m, i, power=1):
        e = [0] * m
        e[i - 1] = power
        return cls(m, {tuple(e): ONE})

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            if other.m != self.m:
                raise ValueError("polynomials in different numbers of variables")
            return other
        c = as_scalar(other)
        if c is NotImplemented:
            raise TypeError("cannot combine LaurentPoly with %r" % (other,))
        return LaurentPoly(self.m, {(0,) * self.m: c})

    def __add__(self, other):
        return LaurentPoly(self.m, _combine(self.terms, self._lift(other).terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.m, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly(self.m, _scale(self.terms, as_scalar(other)))
        other = self._lift(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                _add_into(out, tuple(a + b for a, b in zip(k1, k2)), c1 * c2)
        return LaurentPoly(self.m, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_scalar(other)
        if c is NotImplemented:
            raise TypeError("only division by scalars is supported")
        return self * c.inverse()

    def __pow__(self, k):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (e, c), = self.terms.items()
            return LaurentPoly(self.m, {tuple(-a for a in e): c.inverse()}) ** (-k)
        out = LaurentPoly.one(self.m)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = self._lift(other)
            except TypeError:
                return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                ("z%d" % (i + 1)) if a == 1 else "z%d^%d" % (i + 1, a)
                for i, a in enumerate(e) if a
            )
            cs = str(c)
            neg = False
            if c.den is None and len(c.num) == 1 and next(iter(c.num.values())) < 0:
                neg, cs = True, str(-c)
            if " " in cs and not cs.startswith("("):
                cs = "(" + cs + ")"
            if mono:
                body = mono if cs == "1" else cs + "*" + mono
            else:
                body = cs
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    __repr__ = __str__


def parse_poly(text, m, n=None):
    """Parse a Laurent polynomial in ``z1..zm`` with scalar coefficients."""
    atoms = {"z%d" % (i + 1): LaurentPoly.variable(m, i + 1) for i in range(m)}
    atoms["q"] = LaurentPoly.one(m) * Scalar.q()
    atoms["u"] = LaurentPoly.one(m) * Scalar.u()
    atoms["d"] = LaurentPoly.one(m) * Scalar.monomial(-1, 1)
    if n is not None:
        atoms["p"] = LaurentPoly.one(m) * Scalar.monomial(0, n)
    return parse_expression(text, atoms, lambda k: LaurentPoly.one(m) * k)


def divide_by_difference(num):
    """Divide a homogeneous ``{(a, b): c}`` by ``x - y`` exactly."""
    if not num:
        return {}
    degree = {a + b for a, b in num}
    if len(degree) != 1:
        raise ExactnessError("numerator not homogeneous")
    d = degree.pop()
    lo = min(a for a, _ in num)
    hi = max(a for a, _ in num)
    out = {}
    b_prev = ZERO
    for k in range(lo, hi + 1):
        b_k = b_prev - num.get((k, d - k), ZERO)
        if k == hi:
            if b_k:
                raise ExactnessError("division by z_i - z_j left a remainder")
            break
        if b_k:
            out[(k, d - 1 - k)] = b_k
        b_prev = b_k
    return out


@lru_cache(maxsize=None)
def _t_on_monomial(alpha, beta, corrupt=False):
    """t_{i,j}(z_i^alpha z_j^beta) as ``{(a, b): c}`` in (z_i, z_j)."""
    num = {}
    for key, c in (
        ((alpha + 1, beta), QI),
        ((alpha, beta + 1), -Q),
        ((beta + 1, alpha), Q),
        ((beta, alpha + 1), -QI),
    ):
        _add_into(num, key, c)
    out = divide_by_difference(num)
    if not corrupt:
        _add_into(out, (alpha, beta), -QI)
    return tuple(out.items())


class PolynomialRep:
    """Operators of the polynomial representation on ``m`` variables.

    ``p = u**n`` is the loop parameter.  ``corrupt=True`` drops the
    ``-q^{-1}`` term from ``t`` (a negative control for the relation suite).
    ``loop=-1`` makes ``D_i`` multiply by ``p^-1`` instead of ``p``.
    """

    def __init__(self, m, n=3, corrupt=False, loop=1):
        self.m = m
        self.n = n
        self.corrupt = corrupt
        self.loop = loop

    # elementary operators on term dicts -------------------------------
    def swap_terms(self, f, i, j):
        i, j = i - 1, j - 1
        out = {}
        for e, c in f.items():
            e = list(e)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        return out

    def shift_terms(self, f, i, sign=1):
        i -= 1
        n = self.n * sign * self.loop
        return {e: c * Scalar.monomial(0, n * e[i]) if e[i] else c for e, c in f.items()}

    def y_terms(self, f, i, sign=1):
        i -= 1
        out = {}
        for e, c in f.items():
            e = list(e)
            e[i] -= sign
            out[tuple(e)] = c
        return out

    def t_terms(self, f, i, j, sign=1):
        i, j = i - 1, j - 1
        out = {}
        for e, c in f.items():
            for (a, b), k in _t_on_monomial(e[i], e[j], self.corrupt):
                e2 = list(e)
                e2[i], e2[j] = a, b
                _add_into(out, tuple(e2), c * k)
        if sign == -1:
            for e, c in f.items():
                _add_into(out, e, -QQ * c)
        return out

    def apply_factor(self, factor, f):
        tag = factor[0]
        if tag == "s":
            return self.swap_terms(f, factor[1], factor[2])
        if tag == "D":
            return self.shift_terms(f, factor[1], factor[2])
        if tag == "t":
            return self.t_terms(f, factor[1], factor[2], factor[3])
        if tag == "y":
            return self.y_terms(f, factor[1], factor[2])
        if tag == "mul":
            return (LaurentPoly(self.m, f) * factor[1]).terms
        if tag == "c":
            return _scale(f, factor[1])
        raise ValueError("unknown operator tag %r" % (tag,))

    def apply_word(self, word, f):
        terms = f.terms if isinstance(f, LaurentPoly) else f
        for factor in reversed(word):
            terms = self.apply_factor(factor, terms)
        return LaurentPoly(self.m, terms) if isinstance(f, LaurentPoly) else terms

    # public single operators -----------------------------------------
    def swap(self, i, j, f):
        return LaurentPoly(self.m, self.swap_terms(f.terms, i, j))

    def shift(self, i, f, sign=1):
        return LaurentPoly(self.m, self.shift_terms(f.terms, i, sign))

    def y(self, i, f, sign=1):
        return LaurentPoly(self.m, self.y_terms(f.terms, i, sign))

    def t(self, i, j, f, sign=1):
        if i == j or not (1 <= i <= self.m and 1 <= j <= self.m):
            raise ValueError("bad pair (%d, %d)" % (i, j))
        return LaurentPoly(self.m, self.t_terms(f.terms, i, j, sign))

    # words of the representation -------------------------------------
    def x_word(self, i):
        m = self.m
        word = []
        for k in range(i - 1, 0, -1):
            word += [("t", k, i, 1), ("s", k, i)]
        word.append(("D", i, 1))
        for k in range(m, i, -1):
            word += [("s", i, k), ("t", i, k, -1)]
        return word

    def hat_x_word(self, l):
        m = self.m
        word = [("c", Q ** (m - 1))]
        for k in range(l - 1, 0, -1):
            word += [("t", k, l, -1), ("s", k, l)]
        word.append(("D", l, 1))
        for k in range(m, l, -1):
            word += [("s", l, k), ("t", l, k, 1)]
        return word

    def q_word(self):
        return [("D", 1, 1)] + [("s", 1, k) for k in range(self.m, 1, -1)]

    def generator_word(self, name, i=None, sign=1):
        """Word for ``T_i``, ``Y_i``, ``X_i``, ``Q``, ``Xhat_i`` to the power ``sign``."""
        if name == "T":
            w = [("t", i, i + 1, 1)]
        elif name == "Y":
            w = [("y", i, 1)]
        elif name == "X":
            w = self.x_word(i)
        elif name == "Q":
            w = self.q_word()
        elif name == "Xhat":
            w = self.hat_x_word(i)
        else:
            raise ValueError("unknown generator %r" % name)
        return w if sign == 1 else invert_word(w)

    def T(self, i, f, sign=1):
        return self.apply_word(self.generator_word("T", i, sign), f)

    def Y(self, i, f, sign=1):
        return self.apply_word(self.generator_word("Y", i, sign), f)

    def X(self, i, f, sign=1):
        return self.apply_word(self.generator_word("X", i, sign), f)

    def Q(self, f, sign=1):
        return self.apply_word(self.generator_word("Q", None, sign), f)

    def hat_x(self, l, f, sign=1):
        return self.apply_word(self.generator_word("Xhat", l, sign), f)

    def x_via_q(self, i, f, sign=1):
        """``X_i`` rebuilt from ``X_1 = Q T_{m-1}^{-1}...T_1^{-1}``, ``X_{k+1} = T_k X_k T_k``."""
        word = self.q_word() + [("t", k, k + 1, -1) for k in range(self.m - 1, 0, -1)]
        for k in range(1, i):
            word = [("t", k, k + 1, 1)] + word + [("t", k, k + 1, 1)]
        return self.apply_word(word if sign == 1 else invert_word(word), f)


def invert_word(word):
    out = []
    for f in reversed(word):
        tag = f[0]
        if tag == "s":
            out.append(f)
        elif tag == "D":
            out.append(("D", f[1], -f[2]))
        elif tag == "t":
            out.append(("t", f[1], f[2], -f[3]))
        elif tag == "y":
            out.append(("y", f[1], -f[2]))
        elif tag == "c":
            out.append(("c", f[1].inverse()))
        else:
            raise ValueError("factor %r is not invertible" % (f,))
    return out


_FACTOR = re.compile(r"^(s|D-?|t-?|mul)\((.*)\)$")


def parse_word(text, m, n=None):
    """Parse ``s(i,j) D(i) D-(i) t(i,j) t-(i,j) mul(<poly>)`` tokens.

    The word is a product: the rightmost token acts first.
    """
    tokens = _split_tokens(text)
    word = []
    for tok in tokens:
        mt = _FACTOR.match(tok)
        if not mt:
            raise ParseError("bad operator token %r" % tok)
        head, body = mt.groups()
        if head == "mul":
            word.append(("mul", parse_poly(body, m, n)))
            continue
        try:
            idx = [int(v) for v in body.split(",")]
        except ValueError:
            raise ParseError("bad indices in %r" % tok) from None
        if any(not 1 <= v <= m for v in idx):
            raise ParseError("index out of range in %r" % tok)
        if head in ("s", "t", "t-"):
            if len(idx) != 2 or idx[0] == idx[1]:
                raise ParseError("%r needs two distinct indices" % tok)
            word.append(("s", *idx) if head == "s" else ("t", *idx, -1 if head == "t-" else 1))
        else:
            if len(idx) != 1:
                raise ParseError("%r needs one index" % tok)
            word.append(("D", idx[0], -1 if head == "D-" else 1))
    return word


def _split_tokens(text):
    out, depth, cur = [], 0, []
    for ch in text.strip():
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch.isspace() and depth == 0:
            if cur:
                out.append("".join(cur))
                cur = []
            continue
        cur.append(ch)
    if depth:
        raise ParseError("unbalanced parentheses in %r" % text)
    if cur:
        out.append("".join(cur))
    return out


def format_word(word):
    out = []
    for f in word:
        if f[0] == "s":
            out.append("s(%d,%d)" % f[1:])
        elif f[0] == "D":
            out.append("D%s(%d)" % ("-" if f[2] < 0 else "", f[1]))
        elif f[0] == "t":
            out.append("t%s(%d,%d)" % ("-" if f[3] < 0 else "", f[1], f[2]))
        elif f[0] == "mul":
            out.append("mul(%s)" % f[1])
        else:
            out.append("c(%s)" % f[1])
    return " ".join(out)


def box_monomials(m, bound):
    """All exponent vectors in ``[-bound, bound]^m`` in lexicographic order."""
    from itertools import product

    return [tuple(e) for e in product(range(-bound, bound + 1), repeat=m)]


class RelationReport:
    """Outcome of a relation suite: pass flag plus first failure per relation."""

    def __init__(self):
        self.checked = []
        self.failures = []

    @property
    def ok(self):
        return not self.failures

    def record(self, name, witness=None):
        self.checked.append(name)
        if witness is not None:
            self.failures.append((name, witness))

    def lines(self):
        failed = dict(self.failures)
        return ["%s %s%s" % ("FAIL" if n in failed else "ok  ", n,
                             "" if n not in failed else "  witness: %s" % (failed[n],))
                for n in self.checked]


def daha_relations(m):
    """Relations as ``(name, lhs, rhs, rhs_scalar)`` in generator words.

    A generator word is a list of ``(name, index, sign)``; products act
    rightmost first.  The relation reads ``lhs = rhs_scalar * rhs``.
    """
    rel = []
    for i in range(1, m):
        rel.append(("quadratic T%d" % i, [("T", i, 1), ("T", i, 1)],
                    [("T", i, 1)], "quadratic"))
        rel.append(("inverse T%d" % i, [("T", i, 1), ("T", i, -1)], [], ONE))
    for i in range(1, m - 1):
        rel.append(("braid T%d T%d" % (i, i + 1),
                    [("T", i, 1), ("T", i + 1, 1), ("T", i, 1)],
                    [("T", i + 1, 1), ("T", i, 1), ("T", i + 1, 1)], ONE))
    for i in range(1, m):
        for j in range(i + 2, m):
            rel.append(("commute T%d T%d" % (i, j), [("T", i, 1), ("T", j, 1)],
                        [("T", j, 1), ("T", i, 1)], ONE))
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            rel.append(("commute Y%d Y%d" % (i, j), [("Y", i, 1), ("Y", j, 1)],
                        [("Y", j, 1), ("Y", i, 1)], ONE))
            rel.append(("commute X%d X%d" % (i, j), [("X", i, 1), ("X", j, 1)],
                        [("X", j, 1), ("X", i, 1)], ONE))
    for i in range(1, m):
        rel.append(("T%d^-1 Y%d T%d^-1 = Y%d" % (i, i, i, i + 1),
                    [("T", i, -1), ("Y", i, 1), ("T", i, -1)], [("Y", i + 1, 1)], ONE))
        rel.append(("T%d X%d T%d = X%d" % (i, i, i, i + 1),
                    [("T", i, 1), ("X", i, 1), ("T", i, 1)], [("X", i + 1, 1)], ONE))
        for j in range(1, m + 1):
            if j not in (i, i + 1):
                rel.append(("Y%d T%d = T%d Y%d" % (j, i, i, j), [("Y", j, 1), ("T", i, 1)],
                            [("T", i, 1), ("Y", j, 1)], ONE))
                rel.append(("X%d T%d = T%d X%d" % (j, i, i, j), [("X", j, 1), ("T", i, 1)],
                            [("T", i, 1), ("X", j, 1)], ONE))
    for i in range(2, m):
        rel.append(("Q T%d Q^-1 = T%d" % (i - 1, i),
                    [("Q", None, 1), ("T", i - 1, 1), ("Q", None, -1)], [("T", i, 1)], ONE))
    if m >= 2:
        rel.append(("Q^2 T%d Q^-2 = T1" % (m - 1),
                    [("Q", None, 1), ("Q", None, 1), ("T", m - 1, 1),
                     ("Q", None, -1), ("Q", None, -1)], [("T", 1, 1)], ONE))
    for i in range(1, m):
        rel.append(("Q Y%d Q^-1 = Y%d" % (i, i + 1),
                    [("Q", None, 1), ("Y", i, 1), ("Q", None, -1)], [("Y", i + 1, 1)], ONE))
    rel.append(("Q Y%d Q^-1 = x Y1" % m,
                [("Q", None, 1), ("Y", m, 1), ("Q", None, -1)], [("Y", 1, 1)], "x"))
    x0 = [("X", i, 1) for i in range(1, m + 1)]
    rel.append(("X0 Y1 = x Y1 X0", x0 + [("Y", 1, 1)], [("Y", 1, 1)] + x0, "x"))
    if m >= 2:
        rel.append(("Y2 X1^-1 Y2^-1 X1 = T1^-2",
                    [("Y", 2, 1), ("X", 1, -1), ("Y", 2, -1), ("X", 1, 1)],
                    [("T", 1, -1), ("T", 1, -1)], ONE))
    return rel


def _expand(rep, gens):
    word = []
    for name, i, sign in gens:
        word += rep.generator_word(name, i, sign)
    return word


def central_value(n, loop=1):
    """Scalar by which the central element acts.

    With ``D_i: z_i -> p z_i`` and ``Y_i = z_i^{-1}`` one gets
    ``Q Y_m Q^{-1} = p^{-1} Y_1``, so the central element acts by ``p^{-1}``
    (by ``p`` on the mirrored shift ``loop=-1``).
    """
    return Scalar.monomial(0, -n * loop)


def check_daha_relations(m, bound, n=3, corrupt=False, relations=None, central=None, loop=1):
    """Verify the relation list on every monomial of ``[-bound, bound]^m``.

    ``central`` is the value of the central element (default
    :func:`central_value`).
    """
    rep = PolynomialRep(m, n, corrupt, loop)
    x = central_value(n, loop) if central is None else central
    report = RelationReport()
    for name, lhs, rhs, c in relations or daha_relations(m):
        lw, rw = _expand(rep, lhs), _expand(rep, rhs)
        witness = None
        for e in box_monomials(m, bound):
            f = {e: ONE}
            left = rep.apply_word(lw, f)
            if c == "quadratic":
                # T^2 = (q - q^-1) T + 1
                right = _combine(_scale(rep.apply_word(rw, f), QQ), f)
            else:
                right = _scale(rep.apply_word(rw, f), x if c == "x" else c)
            if left != right:
                witness = "z^%s" % (e,)
                break
        report.record(name, witness)
    return report
