"""Compare the compiled and pure-Python Laurent kernels.

    python benchmarks/bench_laurent.py [--terms 40] [--repeat 5]
"""
import argparse
import random
import timeit

from toroidal import _laurent_py

try:
    from toroidal import _laurent
except ImportError:
    _laurent = None


def random_poly(rng, terms, span=12):
    out = {}
    while len(out) < terms:
        out[(rng.randint(-span, span), rng.randint(-span, span))] = rng.randint(-9, 9) or 1
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--terms", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    a, b = random_poly(rng, args.terms), random_poly(rng, args.terms)
    backends = [("python", _laurent_py)]
    if _laurent is None:
        print("compiled kernel not built; timing the pure-Python fallback only")
    else:
        backends.append(("compiled", _laurent))
        assert _laurent.mul(a, b) == _laurent_py.mul(a, b)
        assert _laurent.add(a, b) == _laurent_py.add(a, b)

    print("%-6s %-9s %12s" % ("op", "backend", "us/call"))
    best = {}
    for op in ("add", "mul"):
        for name, mod in backends:
            fn = getattr(mod, op)
            t = min(timeit.repeat(lambda: fn(a, b), number=args.number, repeat=args.repeat))
            best[op, name] = t / args.number * 1e6
            print("%-6s %-9s %12.2f" % (op, name, best[op, name]))
    if _laurent is not None:
        for op in ("add", "mul"):
            print("speedup %s: %.2fx" % (op, best[op, "python"] / best[op, "compiled"]))


if __name__ == "__main__":
    main()
