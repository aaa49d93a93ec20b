"""Backend selection for the Laurent kernels.

The compiled module is used when it was built; set ``TOROIDAL_PURE=1`` to
force the pure-Python fallback.
"""
import os

if os.environ.get("TOROIDAL_PURE"):
    from . import _laurent_py as kernel
else:
    try:
        from . import _laurent as kernel
    except ImportError:
        from . import _laurent_py as kernel

BACKEND = "compiled" if kernel.__name__.endswith("._laurent") else "python"

add = kernel.add
sub = kernel.sub
mul = kernel.mul
scale = kernel.scale
shift = kernel.shift

__all__ = ["BACKEND", "add", "sub", "mul", "scale", "shift"]
