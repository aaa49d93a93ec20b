"""Command line: ``toroidal verify | act | matrix | dims``.

Exit codes: 0 on success, 1 when a relation check fails, 2 on usage or
parse errors.  Output is deterministic for a fixed configuration.
"""
import argparse
import json
import logging
import re
import sys

from . import suites
from .expr import ParseError
from .fock import FockSpace, WindowError, admissible_m, dumps_fock, fock_basis, loads_fock
from .qwedge import EscapeError, WedgeSpace, degree, dumps_wedge, sector_basis, straighten
from .scalars import ONE, parse_scalar
from .sparse import add_into
from .tensor import TensorSpace, VmModule, dumps_vector
from .torus import MatrixAlgebra, QuantumTorus, format_torus_matrix, parse_torus_matrix, pi_image

log = logging.getLogger("toroidal")

_GEN = re.compile(r"^([A-Za-z]+)(?:_?(\d+))?(?:,(-?\d+))?(?:\^(-?1))?$")


class UsageError(Exception):
    pass


def parse_generator(text):
    """``"f_0,1"`` -> ``("f", 0, 1, 1)``: name, index, mode (or None), power."""
    m = _GEN.match(text.strip())
    if not m:
        raise UsageError("bad generator spec %r (expected e.g. e_1, f_0,1, T_2, Y_1^-1)" % text)
    name, idx, mode, power = m.groups()
    return name, None if idx is None else int(idx), None if mode is None else int(mode), int(power or 1)


def _load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("malformed JSON at line %d column %d: %s" % (exc.lineno, exc.colno, exc.msg))


def _terms(data):
    # a bare term {"index": [...]} stands for a one-term vector
    if isinstance(data, dict) and "terms" in data:
        return data["terms"]
    if isinstance(data, dict):
        return [data]
    if isinstance(data, list):
        return data
    raise UsageError("vector must be a JSON object or list of terms")


def _index_vector(data, n, m=None, with_y=False):
    out = {}
    for t in _terms(data):
        if "index" not in t:
            raise UsageError("term without an index: %r" % (t,))
        j = tuple(int(x) for x in t["index"])
        if m is not None and len(j) != m:
            raise UsageError("index %r does not have length m=%d" % (j, m))
        m = len(j)
        c = parse_scalar(str(t.get("coeff", "1")), n)
        if with_y:
            y = tuple(int(x) for x in t.get("y", [0] * m))
            if len(y) != m:
                raise UsageError("y exponent %r does not have length m=%d" % (y, m))
            add_into(out, (j, y), c)
        else:
            add_into(out, j, c)
    if m is None:
        raise UsageError("empty vector")
    return m, out


def _need_index(name, idx):
    if idx is None:
        raise UsageError("generator %s needs an index" % name)
    return idx


# act ----------------------------------------------------------------------------
def _act_tensor(args, gen, data, vm_module):
    n = args.n
    name, idx, mode, power = gen
    m, v = _index_vector(data, n, args.m, with_y=vm_module)
    space = VmModule(n, m, loop=-1) if vm_module else TensorSpace(n, m)
    if mode is not None:
        raise UsageError("modes are available for the wedge and fock modules")
    if name in ("e", "f", "k"):
        i = _need_index(name, idx)
        top = n if vm_module else n - 1
        if not 0 <= i <= top:
            raise UsageError("generator index %d out of range 0..%d" % (i, top))
        if name == "k":
            img = space.k(i, v, power)
        else:
            if power != 1:
                raise UsageError("only k accepts a power")
            img = getattr(space, name)(i, v)
    elif name in ("T", "X", "Y", "Q"):
        if name == "Y" and not vm_module:
            raise UsageError("Y acts on the vm module")
        if name != "Q":
            i = _need_index(name, idx)
            hi = m - 1 if name == "T" else m
            if not 1 <= i <= hi:
                raise UsageError("%s index %d out of range 1..%d" % (name, i, hi))
        if vm_module:
            img = space.hecke(name, idx, v, power)
        elif name == "T":
            img = space.T(idx, v, power)
        elif name == "Q":
            img = space.Q(v, power)
        else:
            img = space.X(idx, v, power)
    else:
        raise UsageError("unknown generator %r for this module" % name)
    return dumps_vector(n, m, img, vm=vm_module)


def _act_wedge(args, gen, data):
    n = args.n
    name, idx, mode, power = gen
    m, raw = _index_vector(data, n, args.m)
    v = {}
    for j, c in raw.items():
        for k, c2 in straighten(n, j).items():
            add_into(v, k, c * c2)
    W = WedgeSpace(n, m)
    i = _need_index(name, idx)
    if mode is not None:
        img = W.mode(name, i, mode, v)
    elif name in ("e", "f", "k"):
        if not 0 <= i <= n:
            raise UsageError("generator index %d out of range 0..%d" % (i, n))
        img = W.act(name, i, v, power) if name == "k" else W.act(name, i, v)
    else:
        raise UsageError("unknown generator %r for the wedge module" % name)
    sector = data.get("sector") if isinstance(data, dict) else None
    return dumps_wedge(n, m, sector if sector is not None else args.sector, img)


def _act_fock(args, gen, data):
    n = int(data.get("n", args.n)) if isinstance(data, dict) else args.n
    e = int(data.get("sector", args.sector)) if isinstance(data, dict) else args.sector
    v = loads_fock({"n": n, "sector": e, "terms": _terms(data)})
    name, idx, mode, power = gen
    F = FockSpace(n, e)
    i = _need_index(name, idx)
    if mode is not None:
        img = F.mode(name, i, mode, v)
    elif name in ("e", "f", "k"):
        img = F.act(name, i, v, power) if name == "k" else F.act(name, i, v)
    else:
        raise UsageError("unknown generator %r for the fock module" % name)
    return dumps_fock(n, e, img)


def _act_torus(args, gen, operands):
    n = args.n
    name, idx, mode, power = gen
    mat = MatrixAlgebra(QuantumTorus(n), n)
    if name in ("bracket", "mul", "add"):
        if len(operands) != 2:
            raise UsageError("%s takes two operands" % name)
        a, b = (parse_torus_matrix(x, n) for x in operands)
        out = {"bracket": mat.bracket, "mul": mat.mul, "add": mat.add}[name](a, b)
    elif name in ("e", "f", "h"):
        if operands:
            raise UsageError("generator images take no operands")
        i = _need_index(name, idx)
        if not 0 <= i < n:
            raise UsageError("generator index %d out of range 0..%d" % (i, n - 1))
        out = pi_image(name, i, mode or 0, n)
    else:
        raise UsageError("unknown torus operation %r" % name)
    return format_torus_matrix(out, n)


def cmd_act(args):
    gen = parse_generator(args.gen)
    if args.module == "torus":
        print(_act_torus(args, gen, args.operands))
        return 0
    if args.operands:
        raise UsageError("unexpected operands %r" % (args.operands,))
    if args.vec is None:
        raise UsageError("--vec is required for module %s" % args.module)
    data = _load_json(args.vec)
    if args.module in ("tensor", "vm"):
        print(_act_tensor(args, gen, data, args.module == "vm"))
    elif args.module == "wedge":
        print(_act_wedge(args, gen, data))
    else:
        print(_act_fock(args, gen, data))
    return 0


# matrix -------------------------------------------------------------------------
def _matrix(images, basis_of, degree_of, k, window=1, cap=6):
    """Rows over a degree window around ``k``, widened to cover every image.

    ``basis_of(d)`` lists the degree ``d`` basis.  Keys that no window up to
    ``cap`` contains are appended.  Returns ``(target, window, extra)``.
    """
    keys = {j for img in images for j in img}
    degrees = [degree_of(j) for j in keys]
    need = max([window] + [abs(d - k) for d in degrees if d is not None])
    window = min(need, cap)
    target = [j for d in range(max(0, k - window), k + window + 1) for j in basis_of(d)]
    extra = sorted(keys - set(target))
    return target + extra, window, extra


def cmd_matrix(args):
    name, idx, mode, power = parse_generator(args.gen)
    if mode is not None or name not in ("e", "f", "k"):
        raise UsageError("matrix supports e_i, f_i and k_i")
    if name != "k" and power != 1:
        raise UsageError("only k accepts a power")
    i = _need_index(name, idx)
    n, e, k = args.n, args.sector, args.degree
    if not 0 <= i <= n:
        raise UsageError("generator index %d out of range 0..%d" % (i, n))
    if args.module == "fock":
        F = FockSpace(n, e)
        basis_of = lambda d: fock_basis(n, e, d)[d]
        degree_of = F.degree
        act = F.act
    else:
        m = args.m if args.m is not None else admissible_m(e, k, n)
        if (m - e) % n:
            raise UsageError("m=%d and sector %d differ mod n" % (m, e))
        W = WedgeSpace(n, m)
        basis_of = lambda d: sector_basis(e, d, m, n)
        degree_of = lambda j: degree(j, e, n)
        act = W.act
    source = basis_of(k)
    images = [act(name, i, {j: ONE}, power) if name == "k" else act(name, i, {j: ONE}) for j in source]
    if name == "k":
        target, window, extra = _matrix(images, basis_of, degree_of, k, window=0)
    else:
        target, window, extra = _matrix(images, basis_of, degree_of, k)
    zero = 0 * ONE
    rows = [[str(img.get(j, zero)) for img in images] for j in target]
    notes = []
    if window > (0 if name == "k" else 1):
        notes.append("target window widened to degrees %d..%d" % (max(0, k - window), k + window))
    if extra:
        notes.append("%d target vectors outside the degree window appended" % len(extra))
    if args.json:
        out = {"module": args.module, "generator": args.gen, "n": n, "sector": e, "degree": k,
               "source": [list(j) for j in source], "target": [list(j) for j in target],
               "rows": rows, "notes": notes}
        print(json.dumps(out, sort_keys=True))
    else:
        for note in notes:
            print("# " + note)
        print("# columns: %s" % " ".join(str(list(j)) for j in source))
        for j, row in zip(target, rows):
            print("%s: %s" % (list(j), "  ".join(row)))
    return 0


# dims ----------------------------------------------------------------------------
def cmd_dims(args):
    n, e, top = args.n, args.sector, args.max_degree
    if top < 0:
        raise UsageError("--max-degree must be >= 0")
    fb = fock_basis(n, e, top)
    table = []
    for k in range(top + 1):
        m = admissible_m(e, k, n)
        table.append({"degree": k, "m": m, "wedge": len(sector_basis(e, k, m, n)),
                      "fock": len(fb[k]), "partitions": suites._abacus_count(n, e, k)})
    ok = all(r["wedge"] == r["fock"] == r["partitions"] for r in table)
    if args.json:
        print(json.dumps({"n": n, "sector": e, "dims": table, "ok": ok}, sort_keys=True))
    else:
        print("degree  m  wedge  fock  partitions")
        for r in table:
            print("%6d %2d %6d %5d %11d" % (r["degree"], r["m"], r["wedge"], r["fock"], r["partitions"]))
    return 0 if ok else 1


# verify ---------------------------------------------------------------------------
def _suite_params(name, args):
    p = {}
    n, m, k, b = args.n_given, args.m, args.k, args.bound
    if name == "daha":
        if m is not None or b is not None:
            p["cases"] = ((m or 2, 1 if b is None else b),)
    elif name == "hecke":
        p["seed"] = args.seed
        if args.trials is not None:
            p["triples"] = args.trials
        if m is not None:
            p["max_m"] = m
    elif name in ("tensor", "intertwiner", "vm"):
        if n is not None:
            p["n"] = n
        if m is not None:
            p["max_m" if name == "tensor" else "m"] = m
        if b is not None:
            p["bound"] = b
    elif name == "kernel":
        if n is not None:
            p["n"] = n
        if m is not None:
            p["max_m"] = m
    elif name == "omega":
        p["seed"] = args.seed
        if n is not None:
            p["n"] = n
        if m is not None:
            p["m"] = m
        if k is not None:
            p["max_k"] = k
        if args.trials is not None:
            p["cases"] = args.trials
    elif name in ("sectors", "fock"):
        if n is not None:
            p["n"] = n
        if k is not None:
            p["max_k"] = k
        if m is not None:
            p["max_m"] = m
        if name == "fock" and args.sector_given is not None:
            p["sectors"] = (args.sector_given,)
    elif name == "torus":
        if n is not None:
            p["ns"] = (n,)
        if b is not None:
            p["K"] = b
    elif name == "differential":
        if n is not None:
            p["n"] = n
        if b is not None:
            p["K"] = b
    elif name == "uce":
        p["seed"] = args.seed
        if n is not None:
            p["n"] = n
        if b is not None:
            p["N"] = b
        if args.trials is not None:
            p["trials"] = args.trials
    elif name == "dims":
        if n is not None:
            p["ns"] = (n,)
        if k is not None:
            p["max_k"] = k
    return p


def cmd_verify(args):
    name = suites.ALIASES.get(args.suite, args.suite)
    names = suites.suite_names() if name == "all" else [name]
    if name != "all" and name not in suites.SUITES:
        raise UsageError("unknown suite %r; choose from all, %s" % (args.suite, ", ".join(suites.SUITES)))
    results = [suites.run_suite(name, **_suite_params(name, args)) for name in names]
    if args.json:
        report = []
        for r in results:
            d = r.as_dict()
            if args.timing:
                d["seconds"] = round(r.seconds, 3)
            report.append(d)
        print(json.dumps(report if name == "all" else report[0], sort_keys=True, indent=1))
    else:
        for r in results:
            lines = r.lines()
            if args.timing:
                lines[0] += "  (%.1f s)" % r.seconds
            print("\n".join(lines))
    return 0 if all(r.ok for r in results) else 1


# parser ---------------------------------------------------------------------------
def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="rank n (default 3)")
    common.add_argument("--m", type=int, default=None, help="number of tensor slots")
    common.add_argument("--sector", type=int, default=None, help="Fock sector e (default 0)")
    common.add_argument("--k", type=int, default=None, help="degree bound")
    common.add_argument("--bound", type=int, default=None, help="exponent or mode bound")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(prog="toroidal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", required=True, help="suite name or 'all'")
    p.add_argument("--trials", type=int, default=None, help="number of seeded random cases")
    p.add_argument("--timing", action="store_true", help="include timings (not deterministic)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("act", parents=[common], help="apply a generator to a vector")
    p.add_argument("--module", required=True, choices=["tensor", "vm", "wedge", "fock", "torus"])
    p.add_argument("--gen", required=True, help="e.g. e_1, f_0,1 (mode 1), T_2, Y_1^-1, bracket")
    p.add_argument("--vec", default=None, help="vector in the module's JSON format")
    p.add_argument("operands", nargs="*", help="torus operands, e.g. 'E12*z' 'E21*D'")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("matrix", parents=[common], help="matrix of a generator on a component")
    p.add_argument("--module", default="wedge", choices=["wedge", "fock"])
    p.add_argument("--gen", required=True)
    p.add_argument("--degree", type=int, default=0)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("dims", parents=[common], help="graded dimensions of a sector")
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(func=cmd_dims)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    args.n_given, args.sector_given = args.n, args.sector
    args.n = 3 if args.n is None else args.n
    args.sector = 0 if args.sector is None else args.sector
    try:
        if args.n < 2:
            raise UsageError("n must be at least 2")
        for flag in ("m", "k", "bound"):
            if getattr(args, flag) is not None and getattr(args, flag) < 0:
                raise UsageError("--%s must be >= 0" % flag)
        return args.func(args)
    except (UsageError, ParseError, WindowError, EscapeError, OverflowError, ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
