"""Semi-infinite wedges and the Fock space sectors.

A monomial of sector ``e`` is ``u_{j_1} ^ u_{j_2} ^ ...`` with ``j`` strictly
decreasing and ``j_k = e_k = e - k + 1`` for ``k`` large.  It is stored as the
shortest head ``(j_1, ..., j_L)`` after which ``j`` agrees with the vacuum, so
the vacuum ``|e>`` is the empty tuple.  A Fock vector is a dict from heads to
scalars, all in one sector.

Operators are evaluated one degree at a time on a finite wedge space
``Lambda^m`` with ``m = e mod n`` and ``under(m) >= k``, where
``v -> v ^ |e_{m+1}>`` is an isomorphism onto the degree ``k`` part.

>>> F = FockSpace(3, 0)
>>> F.act("k", 0, F.vacuum()) == {(): Scalar.q()}
True
"""
from functools import lru_cache
import json
import logging

from .qwedge import WedgeSpace, vacuum_tuple
from .scalars import ONE, Scalar, parse_scalar
from .sparse import add_into, axpy
from .tensor import split

__all__ = [
    "FockSpace",
    "WindowError",
    "trim",
    "pad",
    "monomial_degree",
    "admissible_m",
    "fock_basis",
    "phi_infinity",
    "dumps_fock",
    "loads_fock",
]

log = logging.getLogger(__name__)

Q = Scalar.q()
U = Scalar.u()


class WindowError(RuntimeError):
    """The finite wedge window hit its cap before the result stabilized."""


@lru_cache(maxsize=None)
def _space(n, m):
    return WedgeSpace(n, m)


def trim(j, e):
    """Shortest head of the monomial whose first entries are ``j``."""
    j = tuple(j)
    L = len(j)
    while L and j[L - 1] == e - L + 1:
        L -= 1
    return j[:L]


def pad(j, e, m):
    """Head ``j`` extended by vacuum entries to length ``m``."""
    if len(j) > m:
        raise ValueError("head %r longer than m=%d" % (j, m))
    return tuple(j) + vacuum_tuple(e, m)[len(j):]


def monomial_degree(j, e, n):
    return sum(split(x, n)[0] - split(y, n)[0] for x, y in zip(j, vacuum_tuple(e, len(j))))


def _check_monomial(j, e, n):
    if any(a <= b for a, b in zip(j, j[1:])):
        raise ValueError("monomial %r is not strictly decreasing" % (j,))
    if j and j[-1] <= e - len(j):
        raise ValueError("monomial %r does not meet the vacuum of sector %d" % (j, e))


def admissible_m(e, k, n):
    """Smallest ``m`` with ``m = e mod n``, ``m >= 1`` and ``(m - 1) // n >= k``."""
    m = e % n or n
    while (m - 1) // n < k:
        m += n
    return m


def fock_basis(n, e, max_degree):
    """Degree ``k`` monomials of sector ``e`` for ``k = 0..max_degree`` (as heads)."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    out = []
    for k in range(max_degree + 1):
        # a deviation at position p costs at least (p - n) / n in degree
        horizon = n * (k + 2)
        vac = vacuum_tuple(e, horizon + 1)
        found = []

        def rec(pos, acc, rest):
            if pos == horizon:
                if rest == 0 and acc[-1] > vac[horizon]:
                    found.append(trim(acc, e))
                return
            top = acc[-1] - 1 if acc else vac[0] + n * (rest + 1)
            for x in range(vac[pos], top + 1):
                cost = split(x, n)[0] - split(vac[pos], n)[0]
                if cost <= rest:
                    rec(pos + 1, acc + [x], rest - cost)

        rec(0, [], k)
        out.append(sorted(found))
    return out


def phi_infinity(v, shift=1):
    """``u_j -> u_{j + shift}``; a vector of sector ``e`` goes to sector ``e + shift``."""
    return {tuple(x + shift for x in j): c for j, c in v.items()}


class FockSpace:
    """Sector ``e`` of the level-one Fock space for rank ``n``."""

    def __init__(self, n, e, window=1, cap=4):
        self.n = n
        self.e = e
        self.window = window
        self.cap = cap

    def vacuum(self):
        return {(): ONE}

    def degree(self, j):
        return monomial_degree(j, self.e, self.n)

    def components(self, v):
        """Split ``v`` into homogeneous parts ``{k: vector}``."""
        out = {}
        for j, c in v.items():
            _check_monomial(j, self.e, self.n)
            out.setdefault(self.degree(j), {})[trim(j, self.e)] = c
        return out

    def basis(self, max_degree):
        return fock_basis(self.n, self.e, max_degree)

    # finite models -------------------------------------------------------
    def reduce_to_finite(self, v, m=None):
        """``(m, w)`` with ``w ^ |e_{m+1}> = v``; ``v`` must be homogeneous."""
        parts = self.components(v)
        if len(parts) > 1:
            raise ValueError("vector is not homogeneous: degrees %s" % sorted(parts))
        k = next(iter(parts), 0)
        if m is None:
            m = admissible_m(self.e, k, self.n)
        elif (m - self.e) % self.n or (m - 1) // self.n < k:
            raise ValueError("m=%d is not admissible for degree %d" % (m, k))
        return m, {pad(j, self.e, m): c for j, c in v.items()}

    def extend_to_fock(self, m, w):
        """``w ^ |e_{m+1}>``; wedges reaching the tail head or below vanish."""
        head = self.e - m
        out = {}
        for j, c in w.items():
            if len(j) != m:
                raise ValueError("wedge %r does not have length %d" % (j, m))
            if j[-1] > head:
                add_into(out, trim(j, self.e), c)
        return out

    def _by_degree(self, v, compute, window=None):
        # compute(k, m, padded vector) -> Fock vector; retried on escape
        if window is None:
            window = self.window
        out = {}
        for k, part in sorted(self.components(v).items()):
            w = window
            while True:
                m = admissible_m(self.e, k + w, self.n)
                res = compute(k, m, {pad(j, self.e, m): c for j, c in part.items()})
                top = max((self.degree(j) for j in res), default=0)
                if top <= (m - 1) // self.n:
                    break
                if w >= self.cap:
                    raise WindowError("degree %d result reaches degree %d at m=%d" % (k, top, m))
                w += 1
                log.info("widening the wedge window to %d for degree %d", w, k)
            axpy(out, res, ONE)
        return out

    # vertical action -------------------------------------------------------
    def act(self, name, i, v, power=1, window=None):
        """``e_i``, ``f_i``, ``k_i`` (``i = 0..n``) with the tail corrections."""
        n, e = self.n, self.e
        if not 0 <= i <= n:
            raise ValueError("generator index %d out of range 0..%d" % (i, n))
        if name not in ("e", "f", "k"):
            raise ValueError("unknown generator %r" % name)
        tail_k = Q if i == 0 else ONE

        def compute(k, m, w):
            space = _space(n, m)
            if name == "k":
                img = space.act("k", i, w, power)
                return self.extend_to_fock(m, {j: c * tail_k ** power for j, c in img.items()})
            img = self.extend_to_fock(m, space.act(name, i, w))
            if name == "e" or i != 0:
                return {j: c * tail_k for j, c in img.items()} if name == "e" else img
            # k_0^-1(v) ^ u_{e_m} ^ |e_{m+2}>
            head = e - m + 1
            for j, c in space.act("k", 0, w, -1).items():
                if j[-1] > head:
                    add_into(img, trim(j + (head,), e), c)
            return img

        return self._by_degree(v, compute, window)

    # toroidal modes ----------------------------------------------------------
    def mode(self, tag, i, r, v, window=0):
        """Mode ``r`` of ``e_i(w)`` / ``f_i(w)`` for ``i = 0..n-1``.

        ``i >= 1`` is transported from the finite wedges; ``i = 0`` is defined
        as ``u^-r phi^-1 e_{1,r} phi`` (``u = p^(1/n)``).
        """
        n = self.n
        if tag not in ("e", "f"):
            raise ValueError("unknown current %r" % tag)
        if not 0 <= i < n:
            raise ValueError("current index %d out of range 0..%d" % (i, n - 1))
        if i == 0:
            shifted = FockSpace(n, self.e + 1, self.window, self.cap)
            img = shifted.mode(tag, 1, r, phi_infinity(v, 1), window)
            return {j: c * U ** (-r) for j, c in phi_infinity(img, -1).items()}
        return self._by_degree(
            v, lambda k, m, w: self.extend_to_fock(m, _space(n, m).mode(tag, i, r, w)), window
        )

    def conjugated_mode(self, tag, j, r, v, steps=1, window=0):
        """``u^(-steps r) phi^-steps X_{j,r} phi^steps`` with ``X`` in ``e, f``."""
        shifted = FockSpace(self.n, self.e + steps, self.window, self.cap)
        img = shifted.mode(tag, j, r, phi_infinity(v, steps), window)
        return {x: c * U ** (-steps * r) for x, c in phi_infinity(img, -steps).items()}


def dumps_fock(n, e, v):
    terms = []
    for j in sorted(v, reverse=True):
        dev = [[p, x] for p, (x, y) in enumerate(zip(j, vacuum_tuple(e, len(j))), 1) if x != y]
        terms.append({"coeff": str(v[j]), "deviations": dev})
    return json.dumps({"n": n, "sector": e, "terms": terms}, sort_keys=True)


def loads_fock(text):
    """Return ``(n, sector, vector)``."""
    data = json.loads(text) if isinstance(text, str) else text
    n, e = int(data["n"]), int(data["sector"])
    out = {}
    for t in data["terms"]:
        dev = {int(p): int(x) for p, x in t["deviations"]}
        if any(p < 1 for p in dev):
            raise ValueError("positions start at 1")
        L = max(dev, default=0)
        j = tuple(dev.get(p, e - p + 1) for p in range(1, L + 1))
        _check_monomial(j, e, n)
        add_into(out, trim(j, e), parse_scalar(str(t["coeff"]), n))
    return out
