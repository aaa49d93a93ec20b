import json

import pytest

from toroidal.suites import ALIASES, SUITES, Check, SuiteResult, run_suite, suite_names


def test_registry():
    assert suite_names()[0] == "daha"
    assert ALIASES["fock12"] in SUITES
    with pytest.raises(KeyError):
        run_suite("nosuch")


def test_result_reporting():
    res = SuiteResult("demo", 0, "demo suite")
    res.add("good", 3)
    res.add("bad", 2, "witness")
    assert not res.ok
    assert res.lines()[0].startswith("FAIL demo")
    assert Check("x", 1).line() == "ok   x (1 instances)"
    data = res.as_dict()
    assert json.loads(json.dumps(data)) == data


@pytest.mark.parametrize("name, params", [
    ("daha", dict(cases=((2, 1),))),
    ("hecke", dict(triples=30)),
    ("tensor", dict(max_m=1)),
    ("intertwiner", dict(m=1)),
    ("kernel", dict(max_m=2)),
    ("omega", dict(cases=5, max_k=1)),
    ("fock", dict(max_m=2, max_k=1, big_m=4, sectors=(0,))),
    ("torus", dict(ns=(3,), K=1)),
    ("differential", dict(K=1)),
    ("dims", dict(ns=(2,), max_k=2)),
])
def test_small_suites_pass(name, params):
    res = run_suite(name, **params)
    assert res.ok, "\n".join(res.lines())


def test_sector_stability_parts_pass():
    res = run_suite("sectors", max_k=1, max_m=3, max_s=1)
    by_name = {c.name: c for c in res.checks}
    assert by_name["vertical generators preserve the sector components"].ok
    assert by_name["pi^{m,k} intertwines the vertical generators"].ok
    assert by_name["pi^{m,k} invertible when under(m) >= k"].ok
