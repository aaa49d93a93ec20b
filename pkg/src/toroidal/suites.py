"""Deterministic verification suites shared by the command line and the tests.

Each suite returns a :class:`SuiteResult` made of named checks.  A check
records how many instances it covered and the first failure, if any.

>>> r = run_suite("hecke", triples=20)
>>> r.ok, r.criterion
(True, 2)
"""
from itertools import combinations_with_replacement, permutations, product
import logging
import random
import time

from .cherednik import check_daha_relations
from .fock import FockSpace, admissible_m, fock_basis
from .hecke import HeckeElement, omega, symmetrizers
from .linalg import Echelon, kernel, rank
from .qwedge import (
    WedgeSpace,
    check_tail_case,
    degree,
    pi_projection,
    sector_basis,
    tail_cases,
    y_shift_cases,
    y_shift_sides,
)
from .scalars import ONE, Scalar
from .sparse import axpy
from .tensor import TensorSpace, VmModule, check_kac_moody, inversions, is_p0, theta_op
from . import torus

__all__ = ["Check", "SuiteResult", "SUITES", "ALIASES", "run_suite", "suite_names"]

log = logging.getLogger(__name__)

Q = Scalar.q()
QI = Q ** -1
U = Scalar.u()


class Check:
    def __init__(self, name, count, failure=None):
        self.name = name
        self.count = count
        self.failure = failure

    @property
    def ok(self):
        return self.failure is None

    def line(self):
        status = "ok  " if self.ok else "FAIL"
        tail = "" if self.ok else "  first failure: %s" % (self.failure,)
        return "%s %s (%d instances)%s" % (status, self.name, self.count, tail)


class SuiteResult:
    def __init__(self, name, criterion, title):
        self.name = name
        self.criterion = criterion
        self.title = title
        self.checks = []
        self.seconds = 0.0

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def add(self, name, count, failure=None):
        self.checks.append(Check(name, count, failure))
        log.info("%s: %s", self.name, self.checks[-1].line())

    def tally(self, name):
        return _Tally(self, name)

    def lines(self):
        head = "%s %s [criterion %d] %s" % ("PASS" if self.ok else "FAIL", self.name,
                                             self.criterion, self.title)
        return [head] + ["  " + c.line() for c in self.checks]

    def as_dict(self):
        return {
            "suite": self.name,
            "criterion": self.criterion,
            "ok": self.ok,
            "checks": [{"name": c.name, "instances": c.count, "ok": c.ok,
                        "failure": None if c.ok else str(c.failure)} for c in self.checks],
        }


class _Tally:
    """Context manager counting instances and keeping the first failure."""

    def __init__(self, result, name):
        self.result = result
        self.name = name
        self.count = 0
        self.failures = 0
        self.first = None

    def __enter__(self):
        return self

    def __call__(self, ok, witness=None):
        self.count += 1
        if not ok:
            self.failures += 1
            if self.first is None:
                self.first = witness
        return ok

    def __exit__(self, *exc):
        if exc[0] is None:
            failure = None
            if self.failures:
                failure = "%d of %d, e.g. %s" % (self.failures, self.count, self.first)
            self.result.add(self.name, self.count, failure)
        return False


def _cyclic_cartan(n):
    return lambda i, j: 2 if (i - j) % n == 0 else (-1 if (i - j) % n in (1, n - 1) else 0)


# criterion 1: double affine Hecke relations -------------------------------------------
def suite_daha(cases=((2, 2), (3, 1)), n=3):
    res = SuiteResult("daha", 1, "DAHA relations on the polynomial representation")
    for m, bound in cases:
        rep = check_daha_relations(m, bound, n=n)
        failure = None if rep.ok else "; ".join("%s at %s" % f for f in rep.failures)
        boxes = (2 * bound + 1) ** m
        res.add("m=%d, %d relations on exponents in [-%d, %d]" % (m, len(rep.checked), bound, bound),
                len(rep.checked) * boxes, failure)
    return res


# criterion 2: finite Hecke algebra ------------------------------------------------------
def _random_hecke(rng, m):
    perms = list(permutations(range(1, m + 1)))
    terms = {}
    for _ in range(rng.randint(1, 3)):
        w = rng.choice(perms)
        terms[w] = Scalar.monomial(rng.randint(-2, 2), 0, rng.choice([-2, -1, 1, 2, 3]))
    return HeckeElement(m, terms)


def suite_hecke(triples=1000, seed=0, max_m=4):
    res = SuiteResult("hecke", 2, "finite Hecke algebra")
    rng = random.Random(seed)
    with res.tally("associativity, %d seeded triples, m <= %d" % (triples, max_m)) as t:
        for _ in range(triples):
            m = rng.randint(2, max_m)
            a, b, c = (_random_hecke(rng, m) for _ in range(3))
            t(((a * b) * c - a * (b * c)).is_zero(), (a, b, c))
    with res.tally("omega(S_m) = q^{m(m-1)} A_m, m = 2, 3, 4") as t:
        for m in (2, 3, 4):
            s, a = symmetrizers(m)
            t((omega(s) - a.scale(Q ** (m * (m - 1)))).is_zero(), m)
    return res


# criterion 3: tensor action -----------------------------------------------------------------
def _tensor_basis(n, m, bound):
    return list(product(range(1 - n * bound, n * (bound + 1) + 1), repeat=m))


def suite_tensor(n=3, max_m=2, bound=1):
    res = SuiteResult("tensor", 3, "quantum affine action on the tensor space")
    cartan = _cyclic_cartan(n)
    for m in range(1, max_m + 1):
        t = TensorSpace(n, m)
        vecs = [{j: ONE} for j in _tensor_basis(n, m, bound)]
        bad = check_kac_moody(t.e, t.f, t.k, range(n), cartan, vecs, stop_first=False)
        res.add("Kac-Moody relations, m=%d" % m, len(vecs), bad[0] if bad else None)
        hecke = [("T", k, s) for k in range(1, m) for s in (1, -1)] + [("Q", s) for s in (1, -1)]
        hecke += [("X", i, s) for i in range(1, m + 1) for s in (1, -1)]
        with res.tally("commutes with T, Q, X, m=%d" % m) as tally:
            for v in vecs:
                for h in hecke:
                    word = t.hecke_word(h[0], h[1], h[2]) if h[0] == "X" else [h]
                    H = lambda w: t.apply_hecke_word(word, w)  # noqa: E731
                    for i in range(n):
                        for name in ("e", "f", "k"):
                            g = getattr(t, name)
                            tally(g(i, H(v)) == H(g(i, v)), (name, i, h, v))
    return res


# criterion 4: the intertwiner --------------------------------------------------------------
def _free_labels(n, m, bound):
    out = []
    for a in product(range(-bound, bound + 1), repeat=m):
        for c in product(range(1, n + 1), repeat=m):
            out.append(tuple(ci - n * ai for ai, ci in zip(a, c)))
    return out


def suite_intertwiner(n=3, m=2, bound=1):
    res = SuiteResult("intertwiner", 4, "intertwiner on the free basis")
    t = TensorSpace(n, m)
    labels = _free_labels(n, m, bound)
    with res.tally("phi o coproduct(g) = g o phi") as tally:
        for label in labels:
            w = {label: ONE}
            pw = t.phi(w)
            for i in range(n):
                for name in ("e", "f", "k"):
                    lhs = t.phi(t.coproduct(name, i, w))
                    rhs = getattr(t, name)(i, pw)
                    tally(lhs == rhs, (name, i, label))
    with res.tally("three-case T_k formula = T_k o phi") as tally:
        for label in labels:
            w = {label: ONE}
            for k in range(1, m):
                tally(t.phi(t.t_free(k, w)) == t.T(k, t.phi(w)), (k, label))
    with res.tally("phi_inverse o phi = id") as tally:
        for label in labels:
            tally(t.phi_inverse(t.phi({label: ONE})) == {label: ONE}, label)
    return res


# criterion 5: V_m --------------------------------------------------------------------------
def _vm_vectors(n, m, bound, ybound):
    out = []
    for j in _tensor_basis(n, m, bound):
        for e in product(range(-ybound, ybound + 1), repeat=m):
            out.append({(j, e): ONE})
    return out


def suite_vm(n=3, m=2, bound=1, ybound=1):
    res = SuiteResult("vm", 5, "toroidal and double affine actions on V_m")
    vm = VmModule(n, m, loop=-1)
    cartan = _cyclic_cartan(n)
    vecs = _vm_vectors(n, m, bound, ybound)
    for label, idx in (("horizontal {0..n-1}", range(n)), ("vertical {1..n}", range(1, n + 1))):
        bad = check_kac_moody(vm.e, vm.f, vm.k, idx, cartan, vecs, stop_first=False)
        res.add("Kac-Moody relations, %s" % label, len(vecs), bad[0] if bad else None)
    hecke = [("T", k, s) for k in range(1, m) for s in (1, -1)]
    hecke += [("Y", i, s) for i in range(1, m + 1) for s in (1, -1)] + [("Q", None, s) for s in (1, -1)]
    with res.tally("toroidal generators commute with T, Y, Q") as tally:
        for v in vecs:
            for name, i, s in hecke:
                H = lambda w: vm.hecke(name, i, w, s)  # noqa: E731
                for g in range(n + 1):
                    for op in (vm.e, vm.f, vm.k):
                        tally(op(g, H(v)) == H(op(g, v)), (op.__name__, g, name, i, s, v))
    with res.tally("e_n, f_n on 1 (x) v_j through the theta operators") as tally:
        zero = (0,) * m
        for j in product(range(1, n + 1), repeat=m):
            if not is_p0(j, n):
                continue
            src = {(j, zero): Q ** inversions(j)}
            for name, theta, pref, ysign in (("e", "f", QI * U, -1), ("f", "e", Q / U, 1)):
                rhs = {}
                for l in range(1, m + 1):
                    for c2, c in theta_op(n, theta, l, {j: ONE}).items():
                        y = tuple(-ysign if r == l - 1 else 0 for r in range(m))
                        axpy(rhs, {(c2, y): c * Q ** inversions(c2)}, pref)
                tally(getattr(vm, name)(n, src) == rhs, (name, j))
    return res


# criterion 6: the kernel of the q-antisymmetrizer --------------------------------------------
def suite_kernel(n=3, max_m=3, lo=-1, hi=None):
    res = SuiteResult("kernel", 6, "sum of Ker(T_i - q) equals sum of Im(T_i + q^-1)")
    hi = n + 1 if hi is None else hi
    for m in range(2, max_m + 1):
        t = TensorSpace(n, m)
        with res.tally("orbit components, m=%d, indices in [%d, %d]" % (m, lo, hi)) as tally:
            with res.tally("normally ordered wedges independent mod Omega, m=%d" % m) as indep:
                for ms in combinations_with_replacement(range(lo, hi + 1), m):
                    basis = sorted(set(permutations(ms)))
                    kers, ims = [], []
                    for i in range(1, m):
                        cols = {}
                        for j in basis:
                            img = t.T(i, {j: ONE})
                            ims.append(axpy(dict(img), {j: ONE}, QI))
                            cols[j] = axpy(dict(img), {j: ONE}, -Q)
                        kers += kernel(cols)
                    rk, ri = rank(kers), rank(ims)
                    tally(rk == ri == rank(kers + ims), (ms, rk, ri))
                    ordered = [{j: ONE} for j in basis if all(a > b for a, b in zip(j, j[1:]))]
                    indep(rank(ims + ordered) == ri + len(ordered) == len(basis), ms)
    return res


# criterion 7: well-definedness of the wedge action ---------------------------------------------
def suite_omega(n=3, m=2, cases=50, seed=0, max_k=2):
    res = SuiteResult("omega", 7, "generators on Omega and mode zero of the currents")
    rng = random.Random(seed)
    W = WedgeSpace(n, m)
    t = W.tensor
    with res.tally("Omega representatives map to 0, %d seeded cases" % cases) as tally:
        for _ in range(cases):
            label = tuple(rng.randint(1 - n, 2 * n) for _ in range(m))
            k = rng.randint(1, m - 1)
            omega_vec = axpy(dict(t.t_free(k, {label: ONE})), {label: ONE}, QI)
            for name in ("e", "f", "k"):
                for i in range(n + 1):
                    tally(not W.project_free(W.act(name, i, omega_vec)), (label, k, name, i))
    for mm, e in ((2, 2), (3, 0), (3, 3)):
        V = WedgeSpace(n, mm)
        with res.tally("mode 0 = level-zero action, m=%d, sector %d, k <= %d" % (mm, e, max_k)) as tally:
            for k in range(max_k + 1):
                for j in sector_basis(e, k, mm, n):
                    for tag in ("e", "f"):
                        for i in range(1, n):
                            tally(V.mode(tag, i, 0, {j: ONE}) == V.act(tag, i, {j: ONE}), (tag, i, j))
    return res


# criterion 8: stabilization maps ----------------------------------------------------------
def _sector_cases(n, max_m):
    # (m, e) with m = e mod n, sector e taken in 1..n
    return [(m, m % n or n) for m in range(1, max_m + 1)]


def suite_sectors(n=3, max_k=2, max_m=4, shift_k=1, max_s=2):
    res = SuiteResult("sectors", 8, "sector stability, stabilization maps, shifted Y identity")
    with res.tally("vertical generators preserve the sector components") as tally:
        for m, e in _sector_cases(n, max_m):
            W = WedgeSpace(n, m)
            for k in range(max_k + 1):
                for j in sector_basis(e, k, m, n):
                    for name in ("e", "f", "k"):
                        for i in range(1, n + 1):
                            img = W.act(name, i, {j: ONE})
                            tally(all(degree(x, e, n) == k for x in img), (m, e, name, i, j))
    with res.tally("pi^{m,k} intertwines the vertical generators") as tally:
        for m, e in _sector_cases(n, max_m):
            small, big = WedgeSpace(n, m), WedgeSpace(n, m + n)
            for k in range(max_k + 1):
                for j in sector_basis(e, k, m + n, n):
                    v = {j: ONE}
                    pv = pi_projection(v, e, m, n)
                    for name in ("e", "f", "k"):
                        for i in range(1, n + 1):
                            lhs = pi_projection(big.act(name, i, v), e, m, n)
                            tally(lhs == small.act(name, i, pv), (m, e, name, i, j))
    table = []
    for k in range(max_k + 1):
        for under in (k - 1, k, k + 1):
            if under < 0:
                continue
            for bar_m in range(1, n + 1):
                m, e = under * n + bar_m, bar_m
                src, dst = sector_basis(e, k, m + n, n), sector_basis(e, k, m, n)
                r = rank([pi_projection({j: ONE}, e, m, n) for j in src])
                table.append((k, under, m, r == len(src) == len(dst), (len(src), len(dst), r)))
    with res.tally("pi^{m,k} invertible when under(m) >= k") as tally:
        for k, under, m, inv, dims in table:
            if under >= k:
                tally(inv, (k, m, dims))
    with res.tally("pi^{m,k} invertible exactly when under(m) >= k") as tally:
        for k, under, m, inv, dims in table:
            tally(inv == (under >= k), (k, m, dims))
    with res.tally("Y_r past X^-under(l) in the semi-infinite wedge") as tally:
        for m, e in _sector_cases(n, max_m):
            under = (m - 1) // n
            for k in range(min(shift_k, under) + 1):
                for s in range(1, max_s + 1):
                    for j in y_shift_cases(n, e, m, k, s):
                        for r in range(1, m + 1):
                            for sign in (1, -1):
                                lhs, rhs = y_shift_sides(n, e, m, j, r, sign)
                                tally(lhs == rhs, (m, e, k, s, j, r, sign))
    return res


# criterion 9: the Fock space action ----------------------------------------------------------
def suite_fock(n=3, max_m=4, max_k=2, big_m=7, sectors=(0, 1)):
    res = SuiteResult("fock", 9, "currents on the Fock space")
    for pair in (False, True):
        name = "paired tail" if pair else "single tail"
        with res.tally("%s, admissible m <= %d and m = %d" % (name, max_m, big_m)) as tally:
            for m in list(range(1, max_m + 1)) + [big_m]:
                for e in range(m % n - n, m % n + n + 1, n):
                    for k in range(max_k + 1):
                        if (m - 1) // n < k:
                            continue
                        for head, tail in tail_cases(n, e, m, k, pair):
                            for tag, r in (("e", -1), ("f", 1)):
                                for i in ((n - 1,) if pair else range(1, n - 1)):
                                    tally(check_tail_case(n, tag, i, r, head, tail),
                                          (tag, i, r, head, tail))
    for e in sectors:
        F = FockSpace(n, e)
        basis = [j for part in fock_basis(n, e, max_k) for j in part]
        with res.tally("sector %d: action independent of the admissible m" % e) as tally:
            for j in basis:
                v = {j: ONE}
                for name in ("e", "f", "k"):
                    for i in range(n + 1):
                        tally(F.act(name, i, v) == F.act(name, i, v, window=2), (name, i, j))
        vecs = [{j: ONE} for j in basis]
        cartan = _cyclic_cartan(n)
        for label, idx in (("horizontal", range(n)), ("vertical", range(1, n + 1))):
            bad = check_kac_moody(lambda i, v: F.act("e", i, v), lambda i, v: F.act("f", i, v),
                                  lambda i, v, p=1: F.act("k", i, v, p), idx, cartan, vecs,
                                  stop_first=False)
            res.add("sector %d: Kac-Moody relations, %s, degrees <= %d" % (e, label, max_k),
                    len(vecs), bad[0] if bad else None)
        with res.tally("sector %d: conjugated currents, degrees <= 1" % e) as tally:
            for j in [j for part in fock_basis(n, e, 1) for j in part]:
                v = {j: ONE}
                for tag in ("e", "f"):
                    for r in (-1, 0, 1):
                        tally(F.mode(tag, 1, r, v) == F.conjugated_mode(tag, 2, r, v, 1), (tag, r, j))
                        tally(F.mode(tag, 2, r, v) == F.conjugated_mode(tag, 1, r, v, 2), (tag, r, j))
    return res


# criterion 10-12: the quantum torus ----------------------------------------------------------
def suite_torus(ns=(3, 4), K=2):
    res = SuiteResult("torus", 10, "toroidal relations in gl_n of the quantum torus")
    for n in ns:
        count, bad = torus.check_toroidal_relations(n, K)
        res.add("n=%d: relations under pi, |k|, |l| <= %d" % (n, K), count,
                "%d failures, e.g. %s" % (len(bad), bad[0][0]) if bad else None)
        M = [list(r) for r in zip(*torus.twist_matrix(n))]
        count, bad = torus.check_toroidal_relations(n, 1, twist=M, stop_first=True)
        res.add("n=%d: control, transposed twist matrix must fail" % n, count,
                None if bad else "no failure detected")
        with res.tally("n=%d: surjectivity witnesses, |k|, |l| <= %d" % (n, K)) as tally:
            mat = torus.MatrixAlgebra(torus.QuantumTorus(n), n)
            for a, b in product(range(1, n + 1), repeat=2):
                for k, l in product(range(-K, K + 1), repeat=2):
                    for cart in ((False, True) if a == b < n else (False,)):
                        if a == b and not cart and (k, l) == (0, 0):
                            continue
                        w = torus.surjectivity_witness(n, a, b, k, l, cart)
                        target = torus.witness_target(n, a, b, k, l, cart)
                        tally(not mat.sub(w.evaluate(n), target), (a, b, k, l, cart))
        with res.tally("n=%d: generators keep their bidegree" % n) as tally:
            for tag in ("e", "f", "h"):
                for i in range(n):
                    for k in range(-K, K + 1):
                        img = torus.pi_image(tag, i, k, n)
                        tally(torus.image_degrees(n, img) == {torus.generator_degree(n, tag, i, k)},
                              (tag, i, k))
    return res


def suite_differential(n=3, K=2):
    res = SuiteResult("differential", 11, "current relations in gl_n of differential operators")
    count, bad = torus.check_toroidal_relations(n, K, "differential")
    res.add("n=%d: mode relations, modes 0..%d" % (n, K), count,
            "%d failures, e.g. %s" % (len(bad), bad[0][0]) if bad else None)
    count, bad = torus.check_toroidal_relations(n, 1, "differential", literal_shift=True, stop_first=True)
    res.add("n=%d: control, unscaled shift must fail" % n, count, None if bad else "no failure detected")
    return res


def _random_uce(rng, space, kind):
    n, alg = space.n, space.alg
    mat = torus.MatrixAlgebra(alg, n)

    def mono():
        return rng.randint(-1, 1), rng.randint(-1, 1)

    x = torus.UceElement()
    if kind in ("mat", "mix"):
        a, b = rng.sample(range(1, n + 1), 2)
        x.mat = mat.elementary(a, b, {mono(): Scalar.const(rng.randint(1, 3))})
        if rng.random() < 0.5:
            a = rng.randint(1, n - 1)
            f = {mono(): ONE}
            x.mat = mat.add(x.mat, mat.elementary(a, a, f), mat.elementary(a + 1, a + 1, alg.scale(f, -1)))
    if kind in ("pair", "mix"):
        x.pairs = {(mono(), mono()): Scalar.const(rng.randint(1, 3))}
    return x


def _uce_add(space, *xs):
    mat = torus.MatrixAlgebra(space.alg, space.n)
    pairs = {}
    for x in xs:
        axpy(pairs, x.pairs)
    return torus.UceElement(mat.add(*[x.mat for x in xs]), pairs)


def _jacobi_failures(space, rng, trials):
    bad = []
    for _ in range(trials):
        x, y, z = (_random_uce(rng, space, rng.choice(["mat", "pair", "mix"])) for _ in range(3))

        def br(a, b):
            return torus.uce_bracket(space, a, b)

        J = _uce_add(space, br(br(x, y), z), br(br(y, z), x), br(br(z, x), y))
        if J.mat or not space.is_zero(J.pairs):
            bad.append((x.mat, x.pairs))
    return bad


def suite_uce(n=3, N=3, trials=100, seed=1, samples=200):
    res = SuiteResult("uce", 12, "universal central extension in a truncated model")
    space = torus.CyclicPairs(n, N)
    space.echelon()
    mons = [(k, l) for k in range(-1, 2) for l in range(-1, 2)]
    with res.tally("<f|g> + <g|f> = 0, box N=%d" % N) as tally:
        for f, g in product(mons, repeat=2):
            tally(space.is_zero(axpy(space.pair({f: ONE}, {g: ONE}), space.pair({g: ONE}, {f: ONE}))), (f, g))
    with res.tally("<fg|h> - <f|gh> - <g|hf> = 0 on %d seeded triples" % samples) as tally:
        alg = space.alg
        pick = random.Random(seed + 1)
        for _ in range(samples):
            f, g, h = ({pick.choice(mons): ONE} for _ in range(3))
            v = space.pair(alg.mul(f, g), h)
            axpy(v, space.pair(f, alg.mul(g, h)), -ONE)
            axpy(v, space.pair(g, alg.mul(h, f)), -ONE)
            tally(space.is_zero(v), (f, g, h))
    rng = random.Random(seed)
    bad = _jacobi_failures(space, rng, trials)
    res.add("Jacobi identity, %d seeded triples" % trials, trials,
            "%d failures, e.g. %s" % (len(bad), bad[0]) if bad else None)
    mat = torus.MatrixAlgebra(space.alg, n)
    with res.tally("forget-center is a homomorphism, %d seeded pairs" % trials) as tally:
        for _ in range(trials):
            x, y = (_random_uce(rng, space, rng.choice(["mat", "pair", "mix"])) for _ in range(2))
            lhs = torus.forget_center(space, torus.uce_bracket(space, x, y))
            rhs = mat.bracket(torus.forget_center(space, x), torus.forget_center(space, y))
            tally(not mat.sub(lhs, rhs), (x.mat, x.pairs, y.mat, y.pairs))
    control = torus.CyclicPairs(n, N)
    control._ech = Echelon()
    bad = _jacobi_failures(control, random.Random(seed), trials)
    res.add("control, Jacobi without the relation span must fail", trials,
            None if bad else "no failure detected")
    return res


# criterion 13: dimensions -------------------------------------------------------------------
def _abacus_count(n, e, k):
    """Degree ``k`` monomials of sector ``e`` from partitions, independent of the wedge code."""
    count = 0

    def deg(p, part):
        x = e - p + 1
        return (x + part - 1) // n - (x - 1) // n

    def rec(p, top, acc):
        nonlocal count
        # rows of length zero end the partition
        count += acc == k
        for part in range(1, top + 1):
            d = acc + deg(p, part)
            if d <= k:
                rec(p + 1, part, d)

    rec(1, n * (k + 1), 0)
    return count


def suite_dims(ns=(2, 3), max_k=4):
    res = SuiteResult("dims", 13, "graded dimensions of the sectors")
    with res.tally("sector_basis = fock_basis = partition count, k <= %d" % max_k) as tally:
        for n in ns:
            for e in range(-1, n + 1):
                fb = fock_basis(n, e, max_k)
                for k in range(max_k + 1):
                    m = admissible_m(e, k, n)
                    sb = sector_basis(e, k, m, n)
                    F = FockSpace(n, e)
                    reduced = sorted(x for j in fb[k] for x in F.reduce_to_finite({j: ONE}, m)[1])
                    counts = (len(sb), len(fb[k]), _abacus_count(n, e, k))
                    tally(len(set(counts)) == 1 and reduced == sb, (n, e, k, counts))
    return res


SUITES = {
    "daha": suite_daha,
    "hecke": suite_hecke,
    "tensor": suite_tensor,
    "intertwiner": suite_intertwiner,
    "vm": suite_vm,
    "kernel": suite_kernel,
    "omega": suite_omega,
    "sectors": suite_sectors,
    "fock": suite_fock,
    "torus": suite_torus,
    "differential": suite_differential,
    "uce": suite_uce,
    "dims": suite_dims,
}


# spelling used by the command line examples
ALIASES = {"fock12": "fock"}


def suite_names():
    return list(SUITES)


def run_suite(name, **params):
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError("unknown suite %r; choose from %s" % (name, ", ".join(SUITES)))
    start = time.perf_counter()
    res = SUITES[name](**params)
    res.seconds = time.perf_counter() - start
    return res
