# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_laurent_py``."""


def add(dict a, dict b):
    cdef dict r = dict(a)
    cdef object k, v, s
    for k, v in b.items():
        s = r.get(k, 0) + v
        if s:
            r[k] = s
        else:
            r.pop(k, None)
    return r


def sub(dict a, dict b):
    cdef dict r = dict(a)
    cdef object k, v, s
    for k, v in b.items():
        s = r.get(k, 0) - v
        if s:
            r[k] = s
        else:
            r.pop(k, None)
    return r


def mul(dict a, dict b):
    cdef dict r = {}
    cdef long a1, b1, a2, b2
    cdef object c1, c2, k1, k2, k
    cdef tuple t
    if len(a) > len(b):
        a, b = b, a
    for k1, c1 in a.items():
        t = <tuple>k1
        a1 = t[0]
        b1 = t[1]
        for k2, c2 in b.items():
            t = <tuple>k2
            a2 = t[0]
            b2 = t[1]
            k = (a1 + a2, b1 + b2)
            r[k] = r.get(k, 0) + c1 * c2
    return {k: c1 for k, c1 in r.items() if c1}


def scale(dict a, object c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def shift(dict a, long dq, long du):
    cdef object k, v
    cdef tuple t
    cdef dict r = {}
    for k, v in a.items():
        t = <tuple>k
        r[(<long>t[0] + dq, <long>t[1] + du)] = v
    return r
