"""Numerical kernel backend selection.

The compiled Cython extension is preferred when present; the pure numpy
fallback implements the same algorithms. ``LIECOMM_KERNELS=pure`` (or
``compiled``) forces a backend at import time, and :func:`use_backend`
switches it programmatically (used by tests and benchmarks).
"""
import os

from . import _pure

try:
    from . import _core
    _HAVE_CORE = True
except ImportError:
    _core = None
    _HAVE_CORE = False

BACKEND = "pure"
jacobi_eigh = _pure.jacobi_eigh
expm_ss = _pure.expm_ss
solve_complex = _pure.solve_complex


def available_backends():
    return ("compiled", "pure") if _HAVE_CORE else ("pure",)


def use_backend(name):
    """Select the kernel backend by name ('compiled' or 'pure')."""
    global BACKEND, jacobi_eigh, expm_ss, solve_complex
    if name == "compiled":
        if not _HAVE_CORE:
            raise ImportError("compiled kernels are not available")
        mod = _core
    elif name == "pure":
        mod = _pure
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    BACKEND = name
    jacobi_eigh = mod.jacobi_eigh
    expm_ss = mod.expm_ss
    solve_complex = mod.solve_complex
    return BACKEND


_requested = os.environ.get("LIECOMM_KERNELS", "").strip().lower()
if _requested in ("compiled", "pure"):
    use_backend(_requested)
elif _HAVE_CORE:
    use_backend("compiled")
