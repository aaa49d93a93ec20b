"""Exact scalars in the field Q(q, u).

A :class:`Scalar` is a reduced fraction of integer Laurent polynomials in
``q`` and ``u``.  The session rank ``n`` ties ``u`` to the loop parameter
through ``p = u**n``; the twist parameter is ``d = u/q``.

>>> q, u = Scalar.q(), Scalar.u()
>>> ((q**2 - 1) / (q - 1)) == q + 1
True
>>> str(qint(2))
'q + q^-1'
>>> specialize(qint(3), 1, 1)
Fraction(3, 1)
"""
from dataclasses import dataclass, field
from fractions import Fraction
from sympy import ZZ
from sympy.polys.rings import ring as _sympy_ring

from . import laurent as lp
from .expr import ParseError, parse_expression

__all__ = [
    "Scalar",
    "ScalarContext",
    "PoleError",
    "ScalarParseError",
    "ZERO",
    "ONE",
    "parse_scalar",
    "qint",
    "qfactorial",
    "specialize",
    "as_scalar",
]

_R, _, _ = _sympy_ring("q,u", ZZ)


class PoleError(ZeroDivisionError):
    """Specialization hit a zero of the denominator."""


class ScalarParseError(ParseError):
    pass


def _poly_gcd(a, b):
    g = _R.from_dict(a).gcd(_R.from_dict(b))
    return {k: int(v) for k, v in g.items()}


def _poly_exquo(a, g):
    return {k: int(v) for k, v in _R.from_dict(a).exquo(_R.from_dict(g)).items()}


def _min_exponents(d):
    return min(k[0] for k in d), min(k[1] for k in d)


def _int_gcd(values, start=0):
    from math import gcd

    g = start
    for v in values:
        g = gcd(g, v)
        if g == 1:
            break
    return g


def _normalize(num, den):
    """Return canonical ``(num, den)``; ``den`` is None when it equals 1."""
    if not num:
        return {}, None
    dq, du = _min_exponents(den)
    if dq or du:
        den = lp.shift(den, -dq, -du)
        num = lp.shift(num, -dq, -du)
    nq, nu = _min_exponents(num)
    poly = lp.shift(num, -nq, -nu) if (nq or nu) else num
    if len(den) == 1:
        c = den[(0, 0)]
        g = _int_gcd(poly.values(), c)
        if c < 0:
            g = -g
        if g != 1:
            poly = {k: v // g for k, v in poly.items()}
            c //= g
        den = {(0, 0): c}
    else:
        g = _poly_gcd(poly, den)
        if len(g) > 1 or g[(0, 0)] != 1:
            poly = _poly_exquo(poly, g)
            den = _poly_exquo(den, g)
        if den[max(den)] < 0:
            poly = {k: -v for k, v in poly.items()}
            den = {k: -v for k, v in den.items()}
    num = lp.shift(poly, nq, nu) if (nq or nu) else poly
    if len(den) == 1 and den.get((0, 0)) == 1:
        den = None
    return num, den


_UNIT = {(0, 0): 1}


class Scalar:
    """Element of Q(q, u) in canonical reduced form.

    ``num`` is a Laurent polynomial carrying the monomial factor, ``den`` a
    genuine polynomial with no monomial factor (``None`` stands for 1).
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=None, den=None, _canonical=False):
        num = {} if num is None else num
        if den is not None and not den:
            raise ZeroDivisionError("zero denominator")
        if _canonical:
            self.num, self.den = num, den
        elif den is None:
            self.num, self.den = {k: v for k, v in num.items() if v}, None
        else:
            self.num, self.den = _normalize({k: v for k, v in num.items() if v}, den)
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                return cls({(0, 0): c.numerator}, {(0, 0): c.denominator})
            c = c.numerator
        return cls({(0, 0): c} if c else {}, None, True)

    @classmethod
    def monomial(cls, qexp=0, uexp=0, c=1):
        return cls({(qexp, uexp): c} if c else {}, None, True)

    @classmethod
    def q(cls):
        return cls.monomial(1, 0)

    @classmethod
    def u(cls):
        return cls.monomial(0, 1)

    @property
    def numerator(self):
        return dict(self.num)

    @property
    def denominator(self):
        return dict(_UNIT if self.den is None else self.den)

    def is_laurent(self):
        return self.den is None

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    # arithmetic
    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        if self.den is None and other.den is None:
            return Scalar(lp.add(self.num, other.num), None, True)
        if self.den == other.den:
            return Scalar(lp.add(self.num, other.num), self.den)
        a = self.den or _UNIT
        b = other.den or _UNIT
        return Scalar(lp.add(lp.mul(self.num, b), lp.mul(other.num, a)), lp.mul(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Scalar({k: -v for k, v in self.num.items()}, self.den, True)

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        if self.den is None and other.den is None:
            return Scalar(lp.mul(self.num, other.num), None, True)
        if not self.num or not other.num:
            return ZERO
        return Scalar(lp.mul(self.num, other.num), lp.mul(self.den or _UNIT, other.den or _UNIT))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("division by zero scalar")
        nq, nu = _min_exponents(self.num)
        poly = lp.shift(self.num, -nq, -nu)
        top = lp.shift(self.den or _UNIT, -nq, -nu)
        return Scalar(top, poly)

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return other
        if len(other.num) == 1 and other.den is None:
            (k, c), = other.num.items()
            if c in (1, -1):
                return Scalar(lp.scale(lp.shift(self.num, -k[0], -k[1]), c), self.den, True)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        if len(self.num) == 1 and self.den is None:
            (key, c), = self.num.items()
            return Scalar({(key[0] * k, key[1] * k): c ** k}, None, True)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()),
                               None if self.den is None else frozenset(self.den.items())))
        return self._hash

    def __str__(self):
        if self.den is None:
            return _format_poly(self.num)
        return "(" + _format_poly(self.num) + ")/(" + _format_poly(self.den) + ")"

    def __repr__(self):
        return "Scalar(%r)" % str(self)


def as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.const(x)
    return NotImplemented


ZERO = Scalar({}, None, True)
ONE = Scalar({(0, 0): 1}, None, True)


def _format_monomial(a, b):
    parts = []
    for name, e in (("q", a), ("u", b)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def _format_poly(d):
    if not d:
        return "0"
    out = []
    for key in sorted(d, reverse=True):
        c = d[key]
        mono = _format_monomial(*key)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else "%d*%s" % (mag, mono)
        else:
            body = str(mag)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def parse_scalar(text, n=None):
    """Parse an arithmetic expression in ``q``, ``u`` (and ``p``, ``d``).

    Accepts the canonical printed form and any expression built from
    integers, the symbols, ``+ - * /``, ``^`` or ``**`` with integer
    exponents, and parentheses.  ``p`` needs the rank ``n``.

    >>> str(parse_scalar("(q^2 - 1)/(q - 1)"))
    'q + 1'
    """
    atoms = {"q": Scalar.q(), "u": Scalar.u(), "d": Scalar.monomial(-1, 1)}
    if n is not None:
        atoms["p"] = Scalar.monomial(0, n)
    try:
        return parse_expression(text, atoms, Scalar.const)
    except ParseError as exc:
        raise ScalarParseError(str(exc)) from None


def _eval(d, q0, u0):
    total = Fraction(0)
    for (a, b), c in d.items():
        total += c * q0 ** a * u0 ** b
    return total


def specialize(a, q0, u0):
    """Evaluate ``a`` at ``q = q0``, ``u = u0`` exactly."""
    q0, u0 = Fraction(q0), Fraction(u0)
    a = as_scalar(a)
    for idx, v in enumerate((q0, u0)):
        if v == 0 and any(k[idx] < 0 for k in a.num):
            raise PoleError("negative power of %s at 0" % "qu"[idx])
    top = _eval(a.num, q0, u0)
    if a.den is None:
        return top
    bottom = _eval(a.den, q0, u0)
    if bottom == 0:
        raise PoleError("denominator %s vanishes at q=%s, u=%s" % (_format_poly(a.den), q0, u0))
    return top / bottom


def qint(k):
    """Quantum integer ``(q^k - q^-k)/(q - q^-1)`` in expanded form."""
    if k == 0:
        return ZERO
    sign = 1 if k > 0 else -1
    k = abs(k)
    return Scalar({(k - 1 - 2 * j, 0): sign for j in range(k)}, None, True)


def qfactorial(k):
    if k < 0:
        raise ValueError("quantum factorial needs k >= 0")
    out = ONE
    for j in range(1, k + 1):
        out = out * qint(j)
    return out


def _cartan(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        a[i][(i + 1) % n] = -1
        a[i][(i - 1) % n] = -1
    return a


def _twist(n):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][(i + 1) % n] = -1
        m[i][(i - 1) % n] = 1
    return m


@dataclass(frozen=True)
class ScalarContext:
    """Rank-``n`` data: ``p = u^n``, ``d = u/q``, Cartan and twist matrices."""

    n: int
    cartan: list = field(init=False, compare=False)
    twist: list = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("rank n must be at least 3")
        object.__setattr__(self, "cartan", _cartan(self.n))
        object.__setattr__(self, "twist", _twist(self.n))

    @property
    def q(self):
        return Scalar.q()

    @property
    def u(self):
        return Scalar.u()

    @property
    def p(self):
        return Scalar.monomial(0, self.n)

    @property
    def d(self):
        return Scalar.monomial(-1, 1)

    def parse(self, text):
        return parse_scalar(text, self.n)
