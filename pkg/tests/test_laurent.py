import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from toroidal import _laurent_py, laurent

try:
    from toroidal import _laurent
except ImportError:
    _laurent = None

polys = st.dictionaries(
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
    st.integers(-20, 20).filter(bool),
    max_size=8,
)


@settings(max_examples=100, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    k = _laurent_py
    assert k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c))
    assert k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c))
    assert k.sub(a, a) == {}
    assert k.shift(k.shift(a, 2, -1), -2, 1) == a


@pytest.mark.skipif(_laurent is None, reason="compiled kernel not built")
@settings(max_examples=100, deadline=None)
@given(polys, polys, st.integers(-5, 5), st.integers(-3, 3))
def test_backends_agree(a, b, c, s):
    for name in ("add", "sub", "mul"):
        assert getattr(_laurent, name)(a, b) == getattr(_laurent_py, name)(a, b)
    assert _laurent.scale(a, c) == _laurent_py.scale(a, c)
    assert _laurent.shift(a, s, -s) == _laurent_py.shift(a, s, -s)


def test_pure_fallback_selected_by_environment():
    code = "from toroidal import laurent; print(laurent.BACKEND)"
    env = dict(os.environ, TOROIDAL_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_default_backend():
    expected = "python" if _laurent is None or os.environ.get("TOROIDAL_PURE") else "compiled"
    assert importlib.reload(laurent).BACKEND == expected
