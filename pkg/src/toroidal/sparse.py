"""Helpers for sparse linear combinations ``{basis label: Scalar}``."""
from .scalars import ONE

__all__ = ["add_into", "combine", "scale", "linear", "axpy", "equal"]


def add_into(acc, key, c):
    v = acc.get(key)
    if v is None:
        if c:
            acc[key] = c
    else:
        v = v + c
        if v:
            acc[key] = v
        else:
            del acc[key]


def axpy(acc, terms, c=ONE):
    """``acc += c * terms`` in place."""
    if c is ONE or c == ONE:
        for k, v in terms.items():
            add_into(acc, k, v)
    elif c:
        for k, v in terms.items():
            add_into(acc, k, v * c)
    return acc


def combine(*pairs):
    """``sum(c * terms for c, terms in pairs)``."""
    out = {}
    for c, terms in pairs:
        axpy(out, terms, c)
    return out


def scale(terms, c):
    if not c:
        return {}
    if c == ONE:
        return dict(terms)
    return {k: v * c for k, v in terms.items()}


def linear(op, terms):
    """Extend ``op(label) -> dict`` linearly to ``terms``."""
    out = {}
    for k, c in terms.items():
        axpy(out, op(k), c)
    return out


def equal(a, b):
    return a == b
