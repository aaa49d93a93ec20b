"""Acceptance gate: one suite per criterion, at the stated sizes and time limits.

Run ``python tests/test_acceptance.py`` for the bare summary, or through
pytest, where the summary is printed at the end of the session.
"""
import pytest

from toroidal.suites import run_suite

# (criterion, suite, parameters, time limit in seconds)
CRITERIA = [
    (1, "daha", dict(cases=((2, 2), (3, 1))), 300),
    (2, "hecke", dict(triples=1000, seed=0, max_m=4), 60),
    (3, "tensor", dict(n=3, max_m=2, bound=1), 600),
    (4, "intertwiner", dict(n=3, m=2, bound=1), 300),
    (5, "vm", dict(n=3, m=2, bound=1), 900),
    (6, "kernel", dict(n=3, max_m=3, lo=-1, hi=4), 300),
    (7, "omega", dict(n=3, m=2, cases=50, seed=0, max_k=2), 600),
    (8, "sectors", dict(n=3, max_k=2), 600),
    (9, "fock", dict(n=3, max_m=4, max_k=2), 1200),
    (10, "torus", dict(ns=(3, 4), K=2), 300),
    (11, "differential", dict(n=3, K=2), 300),
    (12, "uce", dict(trials=100, seed=1), 300),
    (13, "dims", dict(ns=(2, 3), max_k=4), 120),
]

SUMMARY = {}


def evaluate(number, suite, params, limit):
    res = run_suite(suite, **params)
    in_time = res.seconds < limit
    ok = res.ok and in_time
    failed = [c.name for c in res.checks if not c.ok]
    why = "" if ok else "  [%s]" % "; ".join(failed + ([] if in_time else ["over %d s" % limit]))
    SUMMARY[number] = "%s criterion %2d  %-12s %7.1f s / %d s%s" % (
        "PASS" if ok else "FAIL", number, suite, res.seconds, limit, why)
    return res, ok


@pytest.mark.parametrize("number, suite, params, limit", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(number, suite, params, limit):
    res, ok = evaluate(number, suite, params, limit)
    assert ok, "\n".join(res.lines())


if __name__ == "__main__":
    for crit in CRITERIA:
        evaluate(*crit)
        print(SUMMARY[crit[0]], flush=True)
