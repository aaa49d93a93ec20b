"""Sparse bivariate Laurent polynomials as ``{(a, b): int}`` dicts.

Pure-Python kernels; ``_laurent`` (Cython) exposes the same functions.
"""


def add(a, b):
    r = dict(a)
    for k, v in b.items():
        s = r.get(k, 0) + v
        if s:
            r[k] = s
        else:
            r.pop(k, None)
    return r


def sub(a, b):
    r = dict(a)
    for k, v in b.items():
        s = r.get(k, 0) - v
        if s:
            r[k] = s
        else:
            r.pop(k, None)
    return r


def mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    r = {}
    get = r.get
    for (a1, b1), c1 in a.items():
        for (a2, b2), c2 in b.items():
            k = (a1 + a2, b1 + b2)
            r[k] = get(k, 0) + c1 * c2
    return {k: v for k, v in r.items() if v}


def scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def shift(a, dq, du):
    return {(k[0] + dq, k[1] + du): v for k, v in a.items()}
