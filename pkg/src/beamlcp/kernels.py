"""Sweep-kernel backend selection.

The compiled Cython kernel is preferred when the extension built; the
pure-Python kernel is always available and is selected automatically
otherwise.  ``benchmarks/kernel_benchmark.py`` compares the two.
"""

from __future__ import annotations

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built on this host
    _compiled = None

DEFAULT_BACKEND = "cython" if _compiled is not None else "python"

__all__ = ["DEFAULT_BACKEND", "available_backends", "get_kernel"]


def available_backends() -> tuple[str, ...]:
    return ("cython", "python") if _compiled is not None else ("python",)


def get_kernel(backend: str = "auto"):
    """Return the kernel module for a backend name (auto, cython, python)."""
    if backend == "auto":
        return _compiled if _compiled is not None else _kernels_py
    if backend == "cython":
        if _compiled is None:
            raise ValueError("compiled kernel is not available in this installation")
        return _compiled
    if backend == "python":
        return _kernels_py
    raise ValueError(f"unknown kernel backend {backend!r}")
