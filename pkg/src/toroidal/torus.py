"""The quantum torus, its matrix Lie algebras and the toroidal Lie algebra realization.

Elements of an algebra are dicts over exponent pairs:

* ``QuantumTorus(n)``: ``{(k, l): Scalar}`` for ``sum c z^k D^l`` with
  ``D z = p z D`` and ``p = u^n`` (so ``d = p^(1/n) = u``);
* ``DiffOperators()``: ``{(k, l): Fraction}`` for ``sum c z^k del^l`` with
  ``del = z d/dz`` and ``del z = z (del + 1)``.

Matrices are dicts ``{(a, b): element}`` with 1-based ``a, b``.

>>> A = QuantumTorus(3)
>>> A.mul(A.D(), A.z()) == {(1, 1): Scalar.u() ** 3}
True
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .expr import ParseError, parse_expression
from .linalg import Echelon
from .scalars import ONE, Scalar, _cartan, _twist

__all__ = [
    "QuantumTorus",
    "DiffOperators",
    "MatrixAlgebra",
    "cartan_matrix",
    "twist_matrix",
    "pi_image",
    "toroidal_relations",
    "check_toroidal_relations",
    "Witness",
    "surjectivity_witness",
    "bigrade",
    "generator_degree",
    "matrix_bigrade",
    "image_degrees",
    "CyclicPairs",
    "UceElement",
    "uce_bracket",
    "forget_center",
    "parse_torus_matrix",
    "parse_torus_element",
    "format_torus_matrix",
]

U = Scalar.u()


def cartan_matrix(n):
    return [list(r) for r in _cartan(n)]


def twist_matrix(n):
    """``m_ij = -1`` for ``j = i + 1`` and ``1`` for ``j = i - 1`` (indices mod ``n``)."""
    return [list(r) for r in _twist(n)]


def _add_into(acc, key, c):
    v = acc.get(key)
    v = c if v is None else v + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class _Algebra:
    zero_coeff = 0
    one_coeff = 1

    def monomial(self, k=0, l=0, c=None):
        return {(k, l): self.one_coeff if c is None else c}

    def one(self):
        return self.monomial()

    def z(self, k=1):
        return self.monomial(k, 0)

    def add(self, *terms):
        out = {}
        for t in terms:
            for key, c in t.items():
                _add_into(out, key, c)
        return out

    def scale(self, a, c):
        return {key: v * c for key, v in a.items() if v * c}

    def sub(self, a, b):
        return self.add(a, self.scale(b, -1))

    def bracket(self, a, b):
        return self.sub(self.mul(a, b), self.mul(b, a))

    def anticommutator(self, a, b):
        return self.add(self.mul(a, b), self.mul(b, a))

    def mul(self, a, b):
        out = {}
        for (k1, l1), c1 in a.items():
            for (k2, l2), c2 in b.items():
                for key, c in self._mono_mul(k1, l1, k2, l2):
                    _add_into(out, key, c1 * c2 * c)
        return out


class QuantumTorus(_Algebra):
    """``C_p[z^+-1, D^+-1]`` over ``Q(q, u)`` with ``p = u^n``."""

    one_coeff = ONE

    def __init__(self, n):
        self.n = n
        self.p = U ** n

    def D(self, l=1):
        return self.monomial(0, l)

    def _mono_mul(self, k1, l1, k2, l2):
        # D^l1 z^k2 = p^(l1 k2) z^k2 D^l1
        return (((k1 + k2, l1 + l2), self.p ** (l1 * k2)),)

    def format(self, a):
        if not a:
            return "0"
        return " + ".join("(%s) * z^%d * D^%d" % (a[key], key[0], key[1]) for key in sorted(a))


class DiffOperators(_Algebra):
    """``C[z^+-1, del]`` with ``del = z d/dz``, rational coefficients."""

    one_coeff = Fraction(1)

    def d(self, c=0):
        """``del - c``."""
        out = {(0, 1): Fraction(1)}
        if c:
            out[(0, 0)] = -Fraction(c)
        return out

    def power(self, a, k):
        out = self.one()
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def _mono_mul(self, k1, l1, k2, l2):
        # del^l1 z^k2 = z^k2 (del + k2)^l1
        return tuple(((k1 + k2, s + l2), comb(l1, s) * Fraction(k2) ** (l1 - s)) for s in range(l1 + 1))

    def format(self, a):
        if not a:
            return "0"
        return " + ".join("(%s) * z^%d * del^%d" % (a[key], key[0], key[1]) for key in sorted(a))


class MatrixAlgebra:
    """``gl_n`` over an algebra from this module."""

    def __init__(self, alg, n):
        self.alg = alg
        self.n = n

    def elementary(self, a, b, f=None):
        return {(a, b): self.alg.one() if f is None else f}

    def add(self, *mats):
        out = {}
        for M in mats:
            for key, f in M.items():
                s = self.alg.add(out.get(key, {}), f)
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def scale(self, M, c):
        out = {}
        for key, f in M.items():
            s = self.alg.scale(f, c)
            if s:
                out[key] = s
        return out

    def sub(self, A, B):
        return self.add(A, self.scale(B, -1))

    def mul(self, A, B):
        out = {}
        for (a, b), f in A.items():
            for (b2, c), g in B.items():
                if b == b2:
                    out = self.add(out, {(a, c): self.alg.mul(f, g)})
        return out

    def bracket(self, A, B):
        return self.sub(self.mul(A, B), self.mul(B, A))

    def trace(self, A):
        return self.alg.add(*[f for (a, b), f in A.items() if a == b])

    def is_sl(self, A):
        """Trace in ``[A, A]``: no ``z^0 D^0`` term."""
        return not self.trace(A).get((0, 0))

    def format(self, A):
        rows = []
        for a in range(1, self.n + 1):
            rows.append(" | ".join(self.alg.format(A.get((a, b), {})) for b in range(1, self.n + 1)))
        return "\n".join(rows)


# realization -----------------------------------------------------------------
def _mat(n, variant):
    return MatrixAlgebra(QuantumTorus(n) if variant == "torus" else DiffOperators(), n)


def pi_image(tag, i, k, n, variant="torus"):
    """Image of ``e_{i,k}``, ``f_{i,k}``, ``h_{i,k}`` or ``c`` in ``gl_n(A)``."""
    mat = _mat(n, variant)
    alg = mat.alg
    if tag == "c":
        return {}
    if tag not in ("e", "f", "h") or not 0 <= i < n:
        raise ValueError("no generator %s_{%d,%d} for n=%d" % (tag, i, k, n))
    if variant == "torus":
        if i:
            f = alg.monomial(0, -k, U ** (k * i))
            if tag == "e":
                return mat.elementary(i, i + 1, f)
            if tag == "f":
                return mat.elementary(i + 1, i, f)
            return mat.add(mat.elementary(i, i, f), mat.elementary(i + 1, i + 1, alg.scale(f, -1)))
        if tag == "e":
            return mat.elementary(n, 1, alg.monomial(1, -k))
        if tag == "f":
            return mat.elementary(1, n, alg.mul(alg.D(-k), alg.z(-1)))
        return mat.add(mat.elementary(n, n, alg.monomial(0, -k, alg.p ** k)),
                       mat.elementary(1, 1, alg.monomial(0, -k, -ONE)))
    if variant != "differential":
        raise ValueError("unknown variant %r" % variant)
    if k < 0:
        raise ValueError("differential modes are indexed by k >= 0")
    if i:
        f = alg.power(alg.d(Fraction(i, n)), k)
        if tag == "e":
            return mat.elementary(i, i + 1, f)
        if tag == "f":
            return mat.elementary(i + 1, i, f)
        return mat.add(mat.elementary(i, i, f), mat.elementary(i + 1, i + 1, alg.scale(f, -1)))
    # conjugate of the i = n-1 modes by g(z) (the p -> 1 limit of the torus table)
    dk = alg.power(alg.d(), k)
    if tag == "e":
        return mat.elementary(n, 1, alg.mul(alg.z(), dk))
    if tag == "f":
        return mat.elementary(1, n, alg.mul(dk, alg.z(-1)))
    return mat.add(mat.elementary(n, n, alg.power(alg.d(1), k)), mat.elementary(1, 1, alg.scale(dk, -1)))


def _ad_power(mat, x, y, times):
    for _ in range(times):
        y = mat.bracket(x, y)
    return y


def toroidal_relations(n, K, variant="torus", twist=None, literal_shift=False):
    """Yield ``(label, lhs, rhs)`` matrix pairs for the defining relations under ``pi``.

    ``variant="torus"`` uses modes ``|k|, |l| <= K`` and ``d = p^(1/n)``;
    ``variant="differential"`` uses modes ``0..K`` in the cleared-denominator
    mode form with shifts ``-m_ij / n`` (``literal_shift=True`` uses ``m_ij``).
    ``twist`` overrides the matrix ``m_ij``.
    """
    A = cartan_matrix(n)
    M = twist if twist is not None else twist_matrix(n)
    mat = _mat(n, variant)
    zero = {}

    @lru_cache(maxsize=None)
    def g(tag, i, k):
        return pi_image(tag, i, k, n, variant)

    if variant == "torus":
        d = U
        modes = range(-K, K + 1)
        for i, j in product(range(n), repeat=2):
            a, m = A[i][j], M[i][j]
            for k, l in product(modes, repeat=2):
                yield ("[h%d,%d, h%d,%d]" % (i, k, j, l)), mat.bracket(g("h", i, k), g("h", j, l)), zero
                yield ("[h%d,%d, e%d,%d]" % (i, k, j, l), mat.bracket(g("h", i, k), g("e", j, l)),
                       mat.scale(g("e", j, k + l), d ** (k * m) * a))
                yield ("[h%d,%d, f%d,%d]" % (i, k, j, l), mat.bracket(g("h", i, k), g("f", j, l)),
                       mat.scale(g("f", j, k + l), -(d ** (k * m)) * a))
                for t in ("e", "f"):
                    lhs = mat.sub(mat.scale(mat.bracket(g(t, i, k + 1), g(t, j, l)), d ** (-m)),
                                  mat.bracket(g(t, i, k), g(t, j, l + 1)))
                    yield "%s%d,%d twisted %s%d,%d" % (t, i, k, t, j, l), lhs, zero
                yield ("[e%d,%d, f%d,%d]" % (i, k, j, l), mat.bracket(g("e", i, k), g("f", j, l)),
                       g("h", i, k + l) if i == j else zero)
            if i != j:
                for k in modes:
                    for t in ("e", "f"):
                        yield ("serre %s%d on %s%d,%d" % (t, i, t, j, k),
                               _ad_power(mat, g(t, i, 0), g(t, j, k), 1 - a), zero)
        return
    modes = range(0, K + 1)
    for i, j in product(range(n), repeat=2):
        a = A[i][j]
        s = Fraction(M[i][j]) if literal_shift else Fraction(-M[i][j], n)
        for k, l in product(modes, repeat=2):
            yield "[h%d,%d, h%d,%d]" % (i, k, j, l), mat.bracket(g("h", i, k), g("h", j, l)), zero
            if k < K and l < K:
                # (w - z + m)[h_i(z), e_j(w)] has no z^-k-1 w^-l-1 part
                for t in ("e", "f"):
                    lhs = mat.add(mat.bracket(g("h", i, k), g(t, j, l + 1)),
                                  mat.scale(mat.bracket(g("h", i, k + 1), g(t, j, l)), -1),
                                  mat.scale(mat.bracket(g("h", i, k), g(t, j, l)), s))
                    yield "h%d,%d %s%d,%d shifted" % (i, k, t, j, l), lhs, zero
                    # (z - w - m)[x_i(z), x_j(w)] = 0
                    lhs = mat.add(mat.bracket(g(t, i, k + 1), g(t, j, l)),
                                  mat.scale(mat.bracket(g(t, i, k), g(t, j, l + 1)), -1),
                                  mat.scale(mat.bracket(g(t, i, k), g(t, j, l)), -s))
                    yield "%s%d,%d %s%d,%d shifted" % (t, i, k, t, j, l), lhs, zero
            yield ("[e%d,%d, f%d,%d]" % (i, k, j, l), mat.bracket(g("e", i, k), g("f", j, l)),
                   g("h", i, k + l) if i == j else zero)
        for l in modes:
            yield ("[h%d,0, e%d,%d]" % (i, j, l), mat.bracket(g("h", i, 0), g("e", j, l)),
                   mat.scale(g("e", j, l), a))
            yield ("[h%d,0, f%d,%d]" % (i, j, l), mat.bracket(g("h", i, 0), g("f", j, l)),
                   mat.scale(g("f", j, l), -a))
            if i != j:
                for t in ("e", "f"):
                    yield ("serre %s%d on %s%d,%d" % (t, i, t, j, l),
                           _ad_power(mat, g(t, i, 0), g(t, j, l), 1 - a), zero)


def check_toroidal_relations(n, K, variant="torus", twist=None, literal_shift=False, stop_first=False):
    """``(instances, failures)`` with failures as ``(label, lhs - rhs)``."""
    mat = _mat(n, variant)
    count, bad = 0, []
    for label, lhs, rhs in toroidal_relations(n, K, variant, twist, literal_shift):
        count += 1
        diff = mat.sub(lhs, rhs)
        if diff:
            bad.append((label, diff))
            if stop_first:
                break
    return count, bad


# surjectivity ---------------------------------------------------------------
class Witness:
    """Bracket expression over generator images.

    ``("gen", tag, i, k)``, ``("br", x, y)`` and ``("lin", ((c, x), ...))``.
    """

    def __init__(self, node):
        self.node = node

    @classmethod
    def gen(cls, tag, i, k):
        return cls(("gen", tag, i, k))

    def br(self, other):
        return Witness(("br", self, other))

    def lin(self, *pairs):
        return Witness(("lin", tuple(pairs)))

    def evaluate(self, n):
        mat = _mat(n, "torus")
        node = self.node
        if node[0] == "gen":
            return pi_image(node[1], node[2], node[3], n)
        if node[0] == "br":
            return mat.bracket(node[1].evaluate(n), node[2].evaluate(n))
        return mat.add(*[mat.scale(x.evaluate(n), c) for c, x in node[1]])

    def size(self):
        node = self.node
        if node[0] == "gen":
            return 1
        if node[0] == "br":
            return node[1].size() + node[2].size()
        return sum(x.size() for _, x in node[1])

    def __str__(self):
        node = self.node
        if node[0] == "gen":
            return "%s[%d,%d]" % node[1:]
        if node[0] == "br":
            return "[%s, %s]" % (node[1], node[2])
        return " + ".join("(%s)*%s" % (c, x) for c, x in node[1])


def _lin(*pairs):
    return Witness(("lin", tuple(pairs)))


def _scaled(c, w):
    return _lin((c, w))


class _Builder:
    def __init__(self, n):
        self.n = n
        self.p = U ** n

    def other(self, *avoid):
        return next(c for c in range(1, self.n + 1) if c not in avoid)

    def unit(self, a, b):
        """``E_ab (x) 1`` for ``a != b``."""
        if b == a + 1:
            return Witness.gen("e", a, 0)
        if a == b + 1:
            return Witness.gen("f", b, 0)
        step = a + 1 if b > a else a - 1
        return self.unit(a, step).br(self.unit(step, b))

    def d_power(self, a, b, l):
        """``E_ab (x) D^l`` for ``a != b`` from the vertical generators."""
        if b == a + 1:
            return _scaled(U ** (l * a), Witness.gen("e", a, -l))
        if a == b + 1:
            return _scaled(U ** (l * b), Witness.gen("f", b, -l))
        step = a + 1 if b > a else a - 1
        return self.d_power(a, step, l).br(self.unit(step, b))

    def z_power(self, a, b, k):
        """``E_ab (x) z^k`` for ``a != b`` from the horizontal generators."""
        if k == 0:
            return self.unit(a, b)
        if abs(k) > 1:
            c = self.other(a, b)
            s = 1 if k > 0 else -1
            return self.z_power(a, c, k - s).br(self.z_power(c, b, s))
        return self.z_step(a, b, k)

    def z_step(self, a, b, s):
        n = self.n
        x, y = (n, 1) if s == 1 else (1, n)
        if (a, b) == (x, y):
            return Witness.gen("e", 0, 0) if s == 1 else Witness.gen("f", 0, 0)
        if a == x:
            return self.z_step(x, y, s).br(self.unit(y, b))
        if b == y:
            return self.unit(a, x).br(self.z_step(x, y, s))
        if a != y:
            return self.z_step(a, y, s).br(self.unit(y, b))
        if b != x:
            return self.unit(a, x).br(self.z_step(x, b, s))
        c = self.other(a, b)
        return self.z_step(a, c, s).br(self.unit(c, b))

    def offdiag(self, a, b, k, l):
        if l == 0:
            return self.z_power(a, b, k)
        if k == 0:
            return self.d_power(a, b, l)
        c = self.other(a, b)
        return self.z_power(a, c, k).br(self.d_power(c, b, l))

    def cartan(self, a, k, l):
        """``(E_aa - E_{a+1,a+1}) (x) z^k D^l``."""
        return self.offdiag(a, a + 1, k, l).br(self.unit(a + 1, a))

    def diagonal(self, a, k, l):
        """``E_aa (x) z^k D^l`` for ``(k, l) != (0, 0)``."""
        b = a + 1 if a < self.n else a - 1
        p = self.p
        if k and l:
            x = self.z_power(a, b, k).br(self.d_power(b, a, l))
            y, r = self._pair_diff(a, b, k, l), p ** (k * l)
        elif k:
            # [E_ab D, E_ba D^-1 z^k] = (E_aa - p^-k E_bb) z^k
            x = self.d_power(a, b, 1).br(self.offdiag_dz(b, a, k))
            y, r = self._pair_diff(a, b, k, 0), p ** (-k)
        else:
            # [E_ab z, E_ba z^-1 D^l] = (E_aa - p^l E_bb) D^l
            x = self.z_power(a, b, 1).br(self.offdiag(b, a, -1, l))
            y, r = self._pair_diff(a, b, 0, l), p ** l
        return _lin((ONE / (1 - r), x), (-r / (1 - r), y))

    def offdiag_dz(self, a, b, k):
        # E_ab (x) D^-1 z^k = p^-k E_ab (x) z^k D^-1
        return _scaled(self.p ** (-k), self.offdiag(a, b, k, -1))

    def _pair_diff(self, a, b, k, l):
        # (E_aa - E_bb) z^k D^l
        if b == a + 1:
            return self.cartan(a, k, l)
        return _scaled(-ONE, self.cartan(b, k, l))


def surjectivity_witness(n, a, b, k, l, cartan=False):
    """Bracket word whose value is ``E_ab (x) z^k D^l`` (or the Cartan difference).

    With ``cartan=True`` and ``a == b < n`` the target is
    ``(E_aa - E_{a+1,a+1}) (x) z^k D^l``.
    """
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError("matrix indices out of range")
    B = _Builder(n)
    if n < 3:
        raise ValueError("witnesses need n >= 3")
    if a != b:
        return B.offdiag(a, b, k, l)
    if cartan:
        if a == n:
            raise ValueError("no Cartan difference at a = n")
        return B.cartan(a, k, l)
    if (k, l) == (0, 0):
        raise ValueError("E_aa (x) 1 is not in sl_n(A)")
    return B.diagonal(a, k, l)


def witness_target(n, a, b, k, l, cartan=False):
    mat = _mat(n, "torus")
    f = mat.alg.monomial(k, l)
    if a != b or not cartan:
        return mat.elementary(a, b, f)
    return mat.add(mat.elementary(a, a, f), mat.elementary(a + 1, a + 1, mat.alg.scale(f, -1)))


# grading ---------------------------------------------------------------------
def _root(n, a, b):
    # root of E_ab in alpha_1..alpha_{n-1}, as coefficients on alpha_0..alpha_{n-1}
    v = [0] * n
    lo, hi, s = (a, b, 1) if a < b else (b, a, -1)
    for t in range(lo, hi):
        v[t] += s
    return v


def bigrade(n, a, b, key):
    """Degree ``(k, root)`` of ``E_ab (x) z^l D^-k`` where ``key = (l, -k)``."""
    l, minus_k = key
    root = _root(n, a, b) if a != b else [0] * n
    return -minus_k, tuple(r + l for r in root)


def matrix_bigrade(n, M):
    """Degree of a monomial matrix; raises on anything else."""
    if len(M) != 1:
        raise ValueError("not a monomial matrix")
    (a, b), f = next(iter(M.items()))
    if len(f) != 1:
        raise ValueError("not a monomial matrix")
    return bigrade(n, a, b, next(iter(f)))


def generator_degree(n, tag, i, k):
    v = [0] * n
    if tag == "e":
        v[i] = 1
    elif tag == "f":
        v[i] = -1
    return k, tuple(v)


def image_degrees(n, M):
    """Set of degrees of all monomials of a matrix."""
    return {bigrade(n, a, b, key) for (a, b), f in M.items() for key in f}


# universal central extension, truncated ---------------------------------------
class CyclicPairs:
    """``A (x) A / I`` restricted to monomials with exponents in ``[-N, N]^2``.

    ``I`` is spanned by ``f(x)g + g(x)f`` and ``fg(x)h - f(x)gh - g(x)hf`` over
    monomials; a three-term relation is used only when all products stay in
    the box.  Vectors are dicts ``{(f, g): Scalar}`` with ``f, g`` exponent pairs.
    """

    def __init__(self, n, N):
        self.n = n
        self.N = N
        self.alg = QuantumTorus(n)
        self._ech = None
        self.relations_used = 0
        self.relations_skipped = 0

    def in_box(self, key):
        return abs(key[0]) <= self.N and abs(key[1]) <= self.N

    def monomials(self):
        r = range(-self.N, self.N + 1)
        return [(k, l) for k in r for l in r]

    def _prod(self, f, g):
        (key, c), = self.alg._mono_mul(f[0], f[1], g[0], g[1])
        return key, c

    def echelon(self):
        if self._ech is None:
            ech = Echelon()
            mons = self.monomials()
            for f in mons:
                for g in mons:
                    if f <= g:
                        rel = {}
                        _add_into(rel, (f, g), ONE)
                        _add_into(rel, (g, f), ONE)
                        if rel:
                            ech.insert(rel)
            for f, g, h in product(mons, repeat=3):
                fg, c1 = self._prod(f, g)
                gh, c2 = self._prod(g, h)
                hf, c3 = self._prod(h, f)
                if not (self.in_box(fg) and self.in_box(gh) and self.in_box(hf)):
                    self.relations_skipped += 1
                    continue
                rel = {}
                _add_into(rel, (fg, h), c1)
                _add_into(rel, (f, gh), -c2)
                _add_into(rel, (g, hf), -c3)
                if rel:
                    self.relations_used += 1
                    ech.insert(rel)
            self._ech = ech
        return self._ech

    def pair(self, f, g):
        """``<f|g>`` for algebra elements ``f, g``."""
        out = {}
        for kf, cf in f.items():
            for kg, cg in g.items():
                if not (self.in_box(kf) and self.in_box(kg)):
                    need = max(abs(x) for x in kf + kg)
                    raise OverflowError("pair leaves the box; need N >= %d" % need)
                _add_into(out, (kf, kg), cf * cg)
        return out

    def is_zero(self, v):
        return self.echelon().contains(v)

    def equal(self, v, w):
        diff = dict(v)
        for key, c in w.items():
            _add_into(diff, key, -c)
        return self.is_zero(diff)

    def commutator(self, v):
        """``<f|g> -> [f, g]``, well defined on the quotient."""
        out = {}
        for (f, g), c in v.items():
            out = self.alg.add(out, self.alg.scale(self.alg.bracket({f: ONE}, {g: ONE}), c))
        return out


class UceElement:
    """``x + w`` with ``x`` in ``sl_n (x) A`` (a matrix) and ``w`` in ``<A|A>``."""

    def __init__(self, mat=None, pairs=None):
        self.mat = mat or {}
        self.pairs = pairs or {}


def _sl_basis_terms(n, alg, M):
    # expand a trace-free matrix as sum of (a, f) with a in {E_ab, H_a}
    terms = []
    for (a, b), f in M.items():
        if a != b:
            terms.append(({(a, b): 1}, f))
    running = {}
    for a in range(1, n):
        running = alg.add(running, M.get((a, a), {}))
        if running:
            terms.append(({(a, a): 1, (a + 1, a + 1): -1}, running))
    last = alg.add(running, M.get((n, n), {}))
    if last:
        raise ValueError("matrix is not in sl_n (x) A")
    return terms


def _num_mat(n, a):
    return [[a.get((r, c), 0) for c in range(1, n + 1)] for r in range(1, n + 1)]


def _num_mul(x, y):
    n = len(x)
    return [[sum(x[r][t] * y[t][c] for t in range(n)) for c in range(n)] for r in range(n)]


def uce_bracket(space, x, y):
    """Bracket of the universal central extension on ``sl_n (x) A + <A|A>``."""
    n, alg = space.n, space.alg
    mat = MatrixAlgebra(alg, n)
    out_mat, out_pairs = {}, {}
    tx = _sl_basis_terms(n, alg, x.mat)
    ty = _sl_basis_terms(n, alg, y.mat)
    half = Scalar.const(Fraction(1, 2))
    for a, f in tx:
        A = _num_mat(n, a)
        for b, g in ty:
            B = _num_mat(n, b)
            AB, BA = _num_mul(A, B), _num_mul(B, A)
            killing = sum(AB[t][t] for t in range(n))
            if killing:
                c = Scalar.const(Fraction(killing, n))
                for key, v in space.pair(f, g).items():
                    _add_into(out_pairs, key, v * c)
            fg = alg.anticommutator(f, g)
            br = alg.bracket(f, g)
            for r, cidx in product(range(n), repeat=2):
                comm = AB[r][cidx] - BA[r][cidx]
                anti = AB[r][cidx] + BA[r][cidx] - (Fraction(2 * killing, n) if r == cidx else 0)
                entry = alg.add(alg.scale(fg, half * comm) if comm else {},
                                alg.scale(br, half * anti) if anti else {})
                if entry:
                    out_mat = mat.add(out_mat, {(r + 1, cidx + 1): entry})
    # central parts
    wx = space.commutator(x.pairs) if x.pairs else {}
    wy = space.commutator(y.pairs) if y.pairs else {}
    if wx and wy:
        for key, v in space.pair(wx, wy).items():
            _add_into(out_pairs, key, v)
    for w, other, sign in ((wx, y.mat, 1), (wy, x.mat, -1)):
        if w:
            for (r, c), h in other.items():
                entry = alg.scale(alg.bracket(w, h), sign)
                if entry:
                    out_mat = mat.add(out_mat, {(r, c): entry})
    return UceElement(out_mat, out_pairs)


def forget_center(space, x):
    """``x + <f|g> -> x + Id (x) [f, g]`` into ``gl_n(A)``."""
    mat = MatrixAlgebra(space.alg, space.n)
    w = space.commutator(x.pairs)
    ident = {(a, a): w for a in range(1, space.n + 1)} if w else {}
    return mat.add(x.mat, ident)


# text format -------------------------------------------------------------------
class _Value:
    # gl_n(A) matrix for the expression parser; scalars and z, D are multiples of Id
    def __init__(self, mat, M):
        self.mat = mat
        self.M = M

    def _lift(self, other):
        if isinstance(other, _Value):
            return other
        return _ident(self.mat, self.mat.alg.monomial(0, 0, Scalar.const(other)))

    def __add__(self, other):
        return _Value(self.mat, self.mat.add(self.M, self._lift(other).M))

    __radd__ = __add__

    def __neg__(self):
        return _Value(self.mat, self.mat.scale(self.M, -1))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        return _Value(self.mat, self.mat.mul(self.M, self._lift(other).M))

    def __rmul__(self, other):
        return self._lift(other) * self

    def _monomial(self):
        # (key, c) when self is c * Id (x) z^k D^l
        f = self.M.get((1, 1), {})
        if len(f) == 1 and self.M == _ident(self.mat, f).M:
            return next(iter(f.items()))
        raise ParseError("only scalars and monomials in z, D can be inverted")

    def inverse(self):
        (k, l), c = self._monomial()
        alg = self.mat.alg
        inv = alg.mul(alg.monomial(0, -l, c.inverse()), alg.z(-k))
        return _ident(self.mat, inv)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        out = _ident(self.mat, self.mat.alg.one())
        for _ in range(abs(k)):
            out = out * base
        return out


def _ident(mat, f):
    return _Value(mat, {(a, a): dict(f) for a in range(1, mat.n + 1)} if f else {})


def parse_torus_matrix(text, n):
    """Parse e.g. ``E12*z - (u^2)*E21*z^-1*D^2`` into a ``gl_n(A)`` matrix.

    ``E<a><b>`` (or ``E<a>_<b>`` when ``n > 9``) are matrix units; a term
    without one is a multiple of the identity.  ``p`` stands for ``u^n``.

    >>> A = QuantumTorus(3)
    >>> parse_torus_matrix("E21*D*z", 3) == {(2, 1): A.mul(A.D(), A.z())}
    True
    """
    mat = MatrixAlgebra(QuantumTorus(n), n)
    alg = mat.alg

    def scalar(c):
        return _ident(mat, alg.monomial(0, 0, c))

    atoms = {"z": _ident(mat, alg.z()), "D": _ident(mat, alg.D()),
             "q": scalar(Scalar.q()), "u": scalar(U), "p": scalar(alg.p)}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            unit = _Value(mat, mat.elementary(a, b))
            atoms["E%d_%d" % (a, b)] = unit
            if n <= 9:
                atoms["E%d%d" % (a, b)] = unit
    return parse_expression(text, atoms, lambda c: scalar(Scalar.const(c))).M


def parse_torus_element(text, n):
    """Parse a torus element, e.g. ``3*z^2*D^-1 + u``."""
    M = parse_torus_matrix(text, n)
    f = M.get((1, 1), {})
    if M != ({(a, a): f for a in range(1, n + 1)} if f else {}):
        raise ParseError("matrix units in a torus element: %r" % text)
    return f


def format_torus_matrix(M, n):
    """Terms ``(c) * Eab * z^k * D^l`` in sorted order, ``0`` if empty."""
    terms = []
    for (a, b) in sorted(M):
        for (k, l), c in sorted(M[(a, b)].items()):
            terms.append("(%s) * E%d_%d * z^%d * D^%d" % (c, a, b, k, l))
    return " + ".join(terms) or "0"
