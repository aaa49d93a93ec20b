"""Exact computer algebra for double affine Hecke algebras, q-wedges and toroidal actions."""
from .scalars import ONE, ZERO, Scalar, parse_scalar

__version__ = "0.1.0"

__all__ = ["ONE", "ZERO", "Scalar", "parse_scalar", "__version__"]
