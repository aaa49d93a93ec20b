"""q-wedges: the quotient of the tensor module by ``Omega = sum Ker(T_i - q)``.

Wedge vectors are dicts ``{j: Scalar}`` over strictly decreasing index
tuples, in the basis ``u_j = X^{-under(j)} v_{bar(j)}`` of normally ordered
q-wedges.  Three pictures of the same space are used:

* the zeta basis of the tensor space, where ``Omega`` is spanned by
  ``v_{..aa..}`` and ``v_{..ab..} + v_{..ba..}`` so that projection is signed
  antisymmetrization;
* the free basis ``X^a (x) v_c``, where ``u_j`` is the label ``j`` and the
  generators act by explicit formulas; a free label is straightened with
  ``(T_k + q^-1) L in Omega`` and the three-case ``T_k`` formula;
* the quotient of ``V_m`` by ``T_i + q^-1`` and ``Y_i - q^{2(i-m)}``, which
  carries the Drinfeld currents.

For normally ordered ``j`` the first two are related by
``u_j = q^{s(j)} v_j`` with ``s`` given by :func:`scale_exponent`.

>>> w = WedgeSpace(3, 2)
>>> w.project({(1, 2): ONE}) == {(2, 1): -ONE}
True
>>> w.project({(4, 4): ONE})
{}
"""
from functools import lru_cache
import json
import warnings

from .cherednik import LaurentPoly, PolynomialRep
from .scalars import ONE, Scalar, parse_scalar
from .sparse import add_into, axpy
from .tensor import TensorSpace, VmModule, split, theta_op

__all__ = [
    "WedgeSpace",
    "EscapeError",
    "sort_sign",
    "scale_exponent",
    "straighten",
    "vacuum_tuple",
    "degree",
    "sector_basis",
    "pi_projection",
    "tail_cases",
    "check_tail_case",
    "y_shift_cases",
    "y_shift_sides",
    "dumps_wedge",
    "loads_wedge",
]

Q = Scalar.q()
QI = Q ** -1


def qpow(k):
    return Scalar.monomial(k, 0)


class EscapeError(ValueError):
    """An image left the target span of a matrix computation."""

    def __init__(self, escaped):
        self.escaped = sorted(escaped)
        super().__init__("image escapes the target span: %s" % ", ".join(map(str, self.escaped)))


def sort_sign(j):
    """``(sign, sorted)`` bringing ``j`` to decreasing order; ``(0, None)`` on repeats."""
    if len(set(j)) < len(j):
        return 0, None
    order = sorted(range(len(j)), key=lambda r: -j[r])
    sign = 1
    seen = [False] * len(j)
    for start in range(len(j)):
        if seen[start]:
            continue
        length, r = 0, start
        while not seen[r]:
            seen[r] = True
            r = order[r]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign, tuple(j[r] for r in order)


def _inversions(c):
    return sum(1 for s in range(len(c)) for t in range(s + 1, len(c)) if c[s] < c[t])


def scale_exponent(j, n):
    """``s(j)`` with ``u_j = q^{s(j)} v_j`` in the wedge, ``j`` normally ordered."""
    under = [split(x, n)[0] for x in j]
    bars = [split(x, n)[1] for x in j]
    spread = sum(under[s] - under[t] for s in range(len(j)) for t in range(s + 1, len(j)))
    return _inversions(bars) - spread


@lru_cache(maxsize=None)
def _pair(n, x, y):
    return tuple(TensorSpace(n, 2).t_free(1, {(x, y): ONE}).items())


@lru_cache(maxsize=1 << 17)
def _straighten(n, label):
    m = len(label)
    for k in range(m - 1):
        if label[k] <= label[k + 1]:
            break
    else:
        return ((label, ONE),)
    x, y = label[k], label[k + 1]
    if x == y:
        return ()
    # T_k on the ordered label (y, x) has leading term alpha (x, y); with
    # (T_k + q^-1)(y, x) in Omega this solves for (x, y).
    image = dict(_pair(n, y, x))
    alpha = image.pop((x, y))
    image[(y, x)] = image.get((y, x), 0 * ONE) + QI
    out = {}
    for (a, b), c in image.items():
        if not c:
            continue
        for key, v in _straighten(n, label[:k] + (a, b) + label[k + 2:]):
            add_into(out, key, -c * v / alpha)
    return tuple(out.items())


def straighten(n, label):
    """Wedge coordinates of the free label ``label`` (any integer tuple)."""
    return dict(_straighten(n, tuple(label)))


def vacuum_tuple(e, m):
    return tuple(e - r for r in range(m))


def degree(j, e, n):
    """``|under(j) - under(e^m)|``; None when some component is below the vacuum."""
    total = 0
    for x, y in zip(j, vacuum_tuple(e, len(j))):
        d = split(x, n)[0] - split(y, n)[0]
        if d < 0:
            return None
        total += d
    return total


def sector_basis(e, k, m, n):
    """Normally ordered ``j`` with ``under(j) >= under(e^m)`` and degree ``k``, in lex order."""
    if k < 0:
        return []
    if (e - m) % n:
        warnings.warn("sector %d with m=%d: m and e differ mod n" % (e, m), stacklevel=2)
    vac = vacuum_tuple(e, m)
    floors = [split(x, n)[0] for x in vac]
    out = []

    def rec(pos, acc, rest):
        if pos == m:
            if rest == 0:
                out.append(tuple(acc))
            return
        lo = n * floors[pos] + 1
        hi = n * (floors[pos] + rest + 1)
        if acc:
            hi = min(hi, acc[-1] - 1)
        for x in range(lo, hi + 1):
            rec(pos + 1, acc + [x], rest - (split(x, n)[0] - floors[pos]))

    rec(0, [], k)
    out.sort()
    return out


def pi_projection(w, e, m, n):
    """``u_j -> u_{j_1..j_m}`` when the last ``n`` entries sit on the vacuum, else 0."""
    tail = vacuum_tuple(e, m + n)[m:]
    level = {split(x, n)[0] for x in tail}
    out = {}
    for j, c in w.items():
        if len(j) != m + n:
            raise ValueError("expected wedges of length %d" % (m + n))
        if {split(x, n)[0] for x in j[m:]} <= level:
            add_into(out, j[:m], c)
    return out


def _sort_word(c):
    """Word ``w`` in the ``T_k`` with ``v_c = T_w v_{sorted(c)}`` on plain tensors."""
    cur = sorted(c)
    steps = []
    for pos in range(len(c)):
        at = cur.index(c[pos], pos)
        for k in range(at, pos, -1):
            cur[k - 1], cur[k] = cur[k], cur[k - 1]
            steps.append(k)
    return [("T", k, 1) for k in reversed(steps)]


class WedgeSpace:
    """The q-wedge space on ``m`` slots for rank ``n``."""

    def __init__(self, n, m):
        self.n = n
        self.m = m
        self.tensor = TensorSpace(n, m)
        self.poly = PolynomialRep(m, n)
        self._vm = None

    @property
    def vm(self):
        # the double affine action on the mirrored loop shift is the one whose
        # quotient reproduces the explicit generator formulas
        if self._vm is None:
            self._vm = VmModule(self.n, self.m, loop=-1)
        return self._vm

    # conversions -------------------------------------------------------
    def _check(self, j):
        if len(j) != self.m:
            raise ValueError("index %r does not have length m=%d" % (j, self.m))

    def project(self, v):
        """Image of a zeta-basis tensor vector."""
        out = {}
        for j, c in v.items():
            self._check(j)
            sign, k = sort_sign(j)
            if sign:
                add_into(out, k, c * qpow(-scale_exponent(k, self.n)) * sign)
        return out

    def project_free(self, w):
        """Image of a free-basis vector given by labels."""
        out = {}
        for label, c in w.items():
            self._check(label)
            axpy(out, straighten(self.n, label), c)
        return out

    def lift(self, w):
        """Zeta-basis representative of a wedge vector."""
        return {j: c * qpow(scale_exponent(j, self.n)) for j, c in w.items()}

    def free_coordinates(self, w):
        """Representative ``sum P(X^-1) v_c`` as ``{(a, c): coeff}`` with ``P = X^a``."""
        return {self.tensor.free_parts(j): c for j, c in w.items()}

    def quotient(self, v):
        """Image of a ``V_m`` vector ``{(j, e): c}`` (``Y_i -> q^{2(i-m)}``)."""
        out = {}
        m = self.m
        for (j, e), c in v.items():
            sign, k = sort_sign(j)
            if not sign:
                continue
            shift = -2 * sum((i - m) * x for i, x in enumerate(e, 1))
            add_into(out, k, c * qpow(shift - scale_exponent(k, self.n)) * sign)
        return out

    # generators ----------------------------------------------------------
    def k_exponent(self, i, j):
        n = self.n
        if i % n == 0:
            return sum((split(x, n)[1] == n) - (split(x, n)[1] == 1) for x in j)
        return sum((split(x, n)[1] == i) - (split(x, n)[1] == i + 1) for x in j)

    def act(self, name, i, w, power=1):
        """Generator ``name`` in ``e, f, k`` with index ``i`` in ``0..n``."""
        n = self.n
        if not 0 <= i <= n:
            raise ValueError("generator index %d out of range 0..%d" % (i, n))
        if name == "k":
            return {j: c * qpow(power * self.k_exponent(i, j)) for j, c in w.items()}
        if name not in ("e", "f"):
            raise ValueError("unknown generator %r" % name)
        if 0 < i < n:
            return self.project_free(self.tensor.coproduct(name, i, w))
        out = {}
        for j, c in w.items():
            a, cc = self.tensor.free_parts(j)
            for l in range(1, self.m + 1):
                if i == 0:
                    axpy(out, self._loop_term(name, l, a, cc), c)
                else:
                    axpy(out, self._hat_term(name, l, a, cc), c)
        return out

    def _loop_term(self, name, l, a, c):
        # e_0: X_l f_theta,l ; f_0: X_l^-1 e_theta,l
        step = 1 if name == "e" else -1
        img = theta_op(self.n, "f" if name == "e" else "e", l, {c: ONE})
        a2 = a[:l - 1] + (a[l - 1] + step,) + a[l:]
        out = {}
        for c2, v in img.items():
            axpy(out, straighten(self.n, self.tensor.free_label(a2, c2)), v)
        return out

    def _hat_term(self, name, l, a, c):
        # e_n: q^-1 p^(1/n) hat x_l(P) f_theta,l ; f_n: q p^(-1/n) hat x_l^-1(P) e_theta,l
        sign = 1 if name == "e" else -1
        pref = Scalar.monomial(-sign, sign)
        P = LaurentPoly.monomial(tuple(-x for x in a))
        hp = self.poly.hat_x(l, P, sign)
        img = theta_op(self.n, "f" if name == "e" else "e", l, {c: ONE})
        out = {}
        for c2, v in img.items():
            for b, cb in hp.terms.items():
                label = self.tensor.free_label(tuple(-x for x in b), c2)
                axpy(out, straighten(self.n, label), v * cb * pref)
        return out

    def act_tensor(self, name, i, w):
        """Same generators through the zeta-basis action (``i < n``)."""
        if i == self.n:
            raise ValueError("use act_quotient for i = n")
        t = self.tensor
        op = {"e": t.e, "f": t.f, "k": t.k}[name]
        return self.project(op(i, self.lift(w)))

    def act_quotient(self, name, i, w):
        """Generators through ``V_m`` and the Hecke quotient."""
        vm = self.vm
        zero = (0,) * self.m
        rep = {(j, zero): c for j, c in self.lift(w).items()}
        op = {"e": vm.e, "f": vm.f, "k": vm.k}[name]
        return self.quotient(op(i, rep))

    # Drinfeld currents ---------------------------------------------------
    def mode(self, tag, i, r, w, route="hat"):
        """Mode ``r`` of ``e_i(z)`` or ``f_i(z)`` (``i`` in ``1..n-1``), ``z^-r`` convention.

        ``route="hat"`` absorbs ``X^a Y^b`` into a polynomial with the
        ``hat x`` operators; ``route="vm"`` applies every factor inside
        ``V_m`` and is much slower for large ``m``.
        """
        if not 0 < i < self.n:
            raise ValueError("current index %d out of range 1..%d" % (i, self.n - 1))
        if route not in ("hat", "vm"):
            raise ValueError("unknown route %r" % route)
        out = {}
        for j, c in w.items():
            axpy(out, self._mode_basis(tag, i, r, j, route), c)
        return out

    def _mode_seed(self, tag, i, r, c):
        # Y-part of the current applied to v_sorted(c), as a V_m vector
        m = self.m
        c0 = tuple(sorted(c))
        if tag == "f":
            ks = [k for k in range(1, m + 1) if c0[k - 1] == i]
            if not ks:
                return None
            s = max(ks)
            target = c0[:s - 1] + (i + 1,) + c0[s:]
            terms = [([("T", x, 1) for x in range(k, s)], qpow(s - k)) for k in ks]
        elif tag == "e":
            ks = [k for k in range(1, m + 1) if c0[k - 1] == i + 1]
            if not ks:
                return None
            s = min(ks)
            target = c0[:s - 1] + (i,) + c0[s:]
            terms = [([("T", x, 1) for x in range(k - 1, s - 1, -1)], qpow(k - s)) for k in ks]
        else:
            raise ValueError("unknown current %r" % tag)
        # the mirrored loop inverts the p^(i/n) carried with Y_s
        pref = qpow(1 - len(ks)) * Scalar.monomial(self.n, -i) ** (-r)
        y = tuple(r if t == s - 1 else 0 for t in range(m))
        base = {(target, y): qpow(_inversions(target))}
        x = {}
        for word, cq in terms:
            axpy(x, self.vm.apply_word(word, base), cq * pref)
        return x

    def _mode_basis(self, tag, i, r, label, route="hat"):
        a, c = self.tensor.free_parts(label)
        x = self._mode_seed(tag, i, r, c)
        if x is None:
            return {}
        vm = self.vm
        x = vm.apply_word(_sort_word(c), x)
        if route == "vm":
            for l, al in enumerate(a, 1):
                for _ in range(abs(al)):
                    x = vm.X(l, x, 1 if al > 0 else -1)
            return self.quotient(x)
        # X^a Y^-e v_j  ==  hat-transformed polynomial in X^-1 applied to v_j
        out = {}
        start = LaurentPoly.monomial(tuple(-t for t in a))
        for (j, e), k in x.items():
            P = start
            for l, el in enumerate(e, 1):
                for _ in range(abs(el)):
                    P = self.poly.hat_x(l, P, 1 if el > 0 else -1)
            k = k * qpow(-_inversions(j))
            for b, cb in P.terms.items():
                label2 = self.tensor.free_label(tuple(-t for t in b), j)
                axpy(out, straighten(self.n, label2), k * cb)
        return out

    # matrices ------------------------------------------------------------
    def matrix(self, name, i, basis, target):
        """Matrix (rows = ``target``, columns = ``basis``) of a generator."""
        index = {j: r for r, j in enumerate(target)}
        cols = []
        escaped = set()
        for j in basis:
            img = self.act(name, i, {j: ONE})
            escaped.update(k for k in img if k not in index)
            cols.append(img)
        if escaped:
            raise EscapeError(escaped)
        zero = 0 * ONE
        return [[cols[c].get(j, zero) for c in range(len(basis))] for j in target]


def sector_matrix(space, name, i, e, k, window=1, cap=6):
    """Matrix of a generator on ``Lambda^{m,k}_{(e)}`` with the target grown on escape.

    Returns ``(matrix, source basis, target basis)``.
    """
    source = sector_basis(e, k, space.m, space.n)
    while True:
        target = []
        for d in range(max(0, k - window), k + window + 1):
            target += sector_basis(e, d, space.m, space.n)
        try:
            return space.matrix(name, i, source, target), source, target
        except EscapeError:
            if window >= cap:
                raise
            window += 1


def tail_cases(n, e, m, k, pair=False):
    """Pairs ``(head, tail)`` with ``head`` in ``Lambda^m_(e)`` and ``head + tail`` of degree ``k``.

    With ``pair=False`` the tail is one entry of bar ``n``; with ``pair=True``
    it is the two entries of bars ``n-1`` and ``n`` on a common level, in that
    order, so ``head + tail`` is not normally ordered.
    """
    vac = vacuum_tuple(e, m + 2)
    levels = [split(x, n)[0] for x in vac]
    width = 2 if pair else 1
    for dh in range(k + 1):
        for head in sector_basis(e, dh, m, n):
            for lev in range(levels[m], levels[m] + k - dh + 1):
                tail = (lev * n + n - 1, lev * n + n) if pair else (lev * n + n,)
                if max(tail) >= head[-1]:
                    continue
                if dh + sum(lev - levels[m + t] for t in range(width)) == k:
                    yield head, tail


def check_tail_case(n, tag, i, r, head, tail):
    """Does mode ``r`` of the ``tag`` current act on ``head ^ tail`` through ``head``?"""
    m = len(head)
    big = WedgeSpace(n, m + len(tail))
    lhs = big.mode(tag, i, r, straighten(n, head + tail))
    rhs = {}
    for j, c in WedgeSpace(n, m).mode(tag, i, r, {head: ONE}).items():
        axpy(rhs, straighten(n, j + tail), c)
    return lhs == rhs


def y_shift_cases(n, e, m, k, s):
    """``j`` in ``Lambda^{m+s,k}_(e)`` whose last ``s`` entries share a level strictly below ``j_m``."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        basis = sector_basis(e, k, m + s, n)
    for j in basis:
        levels = [split(x, n)[0] for x in j]
        if levels[m - 1] > levels[m] and len(set(levels[m:])) == 1:
            yield j


def _x_power(vm, a, v):
    for l, x in enumerate(a, 1):
        for _ in range(abs(x)):
            v = vm.X(l, v, 1 if x > 0 else -1)
    return v


def y_shift_sides(n, e, m, j, r, sign):
    """Both sides of moving ``X^-under(l)`` past ``Y_r^sign`` on ``v_bar(j)``, as Fock heads.

    ``j = (i, l)`` with ``len(i) = m``; the wedges are closed off with the
    vacuum of sector ``e`` below position ``len(j)``.
    """
    M = len(j)
    space = WedgeSpace(n, M)
    vm = space.vm
    levels = [split(x, n)[0] for x in j]
    base = {(tuple(split(x, n)[1] for x in j), (0,) * M): ONE}
    lhs = _x_power(vm, [-x for x in levels], vm.Y(r, base, sign))
    inner = _x_power(vm, [0] * m + [-x for x in levels[m:]], base)
    rhs = _x_power(vm, [-x for x in levels[:m]] + [0] * (M - m), vm.Y(r, inner, sign))
    head = e - M

    def close(v):
        out = {}
        for k, c in space.quotient(v).items():
            if k[-1] > head:
                add_into(out, k, c)
        return out

    return close(lhs), close(rhs)


def dumps_wedge(n, m, sector, w):
    terms = [{"coeff": str(w[j]), "index": list(j)} for j in sorted(w, reverse=True)]
    return json.dumps({"n": n, "m": m, "sector": sector, "terms": terms}, sort_keys=True)


def loads_wedge(text):
    """Return ``(n, m, sector, vector)``; indices need not be normally ordered."""
    data = json.loads(text) if isinstance(text, str) else text
    n, m = int(data["n"]), int(data["m"])
    sector = data.get("sector")
    out = {}
    for t in data["terms"]:
        j = tuple(int(x) for x in t["index"])
        if len(j) != m:
            raise ValueError("index %r does not have length m=%d" % (j, m))
        axpy(out, straighten(n, j), parse_scalar(str(t["coeff"]), n))
    return n, m, sector, out
