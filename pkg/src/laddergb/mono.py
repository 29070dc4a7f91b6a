"""Monomial kernel selector.

Imports the compiled kernel when available and falls back to the pure
Python implementation.  Setting LADDERGB_PURE=1 in the environment, or
calling use_backend(), forces a choice; benchmarks exercise both.

Call sites should use `from laddergb import mono` and attribute access
(mono.mul, ...) so that use_backend() takes effect everywhere.
"""

import os

from . import _mono_py

_backends = {"python": _mono_py}
try:
    from . import _speedups

    _backends["c"] = _speedups
except ImportError:
    pass

BACKEND = None
mul = divides = div = lcm = coprime = deg = None


def use_backend(name: str):
    """Select the kernel backend: "python" or "c"."""
    global BACKEND, mul, divides, div, lcm, coprime, deg
    impl = _backends[name]
    BACKEND = name
    mul = impl.mul
    divides = impl.divides
    div = impl.div
    lcm = impl.lcm
    coprime = impl.coprime
    deg = impl.deg


def available_backends():
    return sorted(_backends)


if os.environ.get("LADDERGB_PURE") == "1" or "c" not in _backends:
    use_backend("python")
else:
    use_backend("c")
