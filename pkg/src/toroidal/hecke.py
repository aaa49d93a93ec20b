"""Finite Hecke algebra of type gl_m in the standard basis ``T_w``.

Permutations are one-line tuples over ``1..m``.  Multiplication straightens
by left multiplication with generators:

    T_i T_w = T_{s_i w}                         if l(s_i w) > l(w)
    T_i T_w = (q - q^-1) T_w + T_{s_i w}        otherwise

>>> h = HeckeElement.generator(2, 1)
>>> print(h * h)
(q - q^-1) * T[2,1] + 1 * T[1,2]
"""
from itertools import permutations
import re

from .scalars import ONE, ZERO, Scalar, as_scalar, parse_scalar

__all__ = [
    "HeckeElement",
    "length",
    "reduced_word",
    "from_word",
    "interval",
    "symmetrizers",
    "omega",
    "parse_hecke",
]

Q = Scalar.q()
QQ = Q - Q ** -1  # q - q^{-1}


def length(w):
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def left_mul_simple(i, w):
    """Return ``s_i w``: swap the values ``i`` and ``i+1`` in the window."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


def is_left_ascent(i, w):
    """True iff l(s_i w) > l(w), i.e. ``i`` occurs before ``i+1``."""
    return w.index(i) < w.index(i + 1)


def reduced_word(w):
    """Reduced word ``(i_1, ..., i_k)`` with ``w = s_{i_1} ... s_{i_k}``."""
    word = []
    w = tuple(w)
    while True:
        for i in range(1, len(w)):
            if not is_left_ascent(i, w):
                word.append(i)
                w = left_mul_simple(i, w)
                break
        else:
            return word


class HeckeElement:
    """Finitely supported map permutation -> Scalar."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def identity(cls, m):
        return cls(m, {tuple(range(1, m + 1)): ONE})

    @classmethod
    def basis(cls, w, c=ONE):
        return cls(len(w), {tuple(w): as_scalar(c)})

    @classmethod
    def generator(cls, m, i, sign=1):
        """``T_i`` (sign +1) or ``T_i^{-1} = T_i - (q - q^-1)`` (sign -1)."""
        if not 1 <= i < m:
            raise ValueError("generator index %d out of range for m=%d" % (i, m))
        e = tuple(range(1, m + 1))
        s = left_mul_simple(i, e)
        if sign == 1:
            return cls(m, {s: ONE})
        return cls(m, {s: ONE, e: -QQ})

    def left_generator(self, i):
        """Return ``T_i * self``."""
        out = {}
        for w, c in self.terms.items():
            sw = left_mul_simple(i, w)
            if is_left_ascent(i, w):
                out[sw] = out.get(sw, ZERO) + c
            else:
                out[sw] = out.get(sw, ZERO) + c
                out[w] = out.get(w, ZERO) + QQ * c
        return HeckeElement(self.m, out)

    def _check(self, other):
        if not isinstance(other, HeckeElement):
            return HeckeElement.identity(self.m).scale(as_scalar(other))
        if other.m != self.m:
            raise ValueError("Hecke elements of different rank: %d vs %d" % (self.m, other.m))
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return HeckeElement(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement(self.m, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c):
        return HeckeElement(self.m, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return self.scale(as_scalar(other))
        other = self._check(other)
        total = HeckeElement(self.m)
        for w, c in self.terms.items():
            part = other
            for i in reversed(reduced_word(w)):
                part = part.left_generator(i)
            total = total + part.scale(c)
        return total

    def __rmul__(self, other):
        return self.scale(as_scalar(other))

    def __eq__(self, other):
        if isinstance(other, HeckeElement):
            return self.m == other.m and self.terms == other.terms
        return self == self._check(other)

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (-length(w), w)):
            parts.append("%s * T[%s]" % (_wrap(self.terms[w]), ",".join(map(str, w))))
        return " + ".join(parts)

    __repr__ = __str__


def _wrap(c):
    s = str(c)
    if " " in s and not s.startswith("("):
        return "(" + s + ")"
    return s


def from_word(m, word, signs=None):
    """Product ``T_{i_1}^{e_1} ... T_{i_k}^{e_k}``."""
    signs = signs or [1] * len(word)
    out = HeckeElement.identity(m)
    for i, e in zip(reversed(word), reversed(signs)):
        out = HeckeElement.generator(m, i, e) * out
    return out


def interval(m, i, j):
    """``T_i T_{i+-1} ... T_j`` stepping from ``i`` towards ``j``."""
    step = 1 if j >= i else -1
    return from_word(m, list(range(i, j + step, step)))


def symmetrizers(m):
    """Return ``(S_m, A_m)``."""
    s, a = {}, {}
    for w in permutations(range(1, m + 1)):
        l = length(w)
        s[w] = Q ** l
        a[w] = (-Q) ** (-l)
    return HeckeElement(m, s), HeckeElement(m, a)


def omega(x):
    """Involution ``T_i -> -T_i^{-1}`` extended multiplicatively."""
    total = HeckeElement(x.m)
    for w, c in x.terms.items():
        word = reduced_word(w)
        img = from_word(x.m, word, [-1] * len(word)).scale((-ONE) ** len(word))
        total = total + img.scale(c)
    return total


_TERM = re.compile(r"^\s*(.*?)\s*\*\s*T\[([\d,\s]*)\]\s*$")


def parse_hecke(text):
    """Parse ``coeff * T[w] + ...`` (the printed form)."""
    pieces = _split_top(text)
    out = None
    for piece in pieces:
        m = _TERM.match(piece)
        if not m:
            raise ValueError("bad Hecke term %r" % piece)
        w = tuple(int(v) for v in m.group(2).split(",") if v.strip())
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError("not a permutation: %r" % (w,))
        c = parse_scalar(m.group(1)) if m.group(1) else ONE
        term = HeckeElement.basis(w, c)
        out = term if out is None else out + term
    if out is None:
        raise ValueError("empty Hecke element")
    return out


def _split_top(text):
    """Split on `` + `` outside parentheses and brackets."""
    parts, depth, cur = [], 0, []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and text.startswith(" + ", i):
            parts.append("".join(cur))
            cur = []
            i += 3
            continue
        cur.append(ch)
        i += 1
    parts.append("".join(cur))
    return [p for p in parts if p.strip()]
