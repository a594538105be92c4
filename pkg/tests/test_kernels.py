"""Tests for kernel backend selection and compiled/pure parity."""

from __future__ import annotations

import numpy as np
import pytest

from beamlcp import PgsOptions, available_backends, get_kernel, solve_structured
from beamlcp.kernels import DEFAULT_BACKEND
from beamlcp.generate import gen_contact

HAS_COMPILED = "cython" in available_backends()


def test_python_backend_is_always_available():
    assert "python" in available_backends()
    assert callable(get_kernel("python").pgs_run)


def test_default_backend_is_listed():
    assert DEFAULT_BACKEND in available_backends()
    assert get_kernel("auto") is get_kernel(DEFAULT_BACKEND)


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        get_kernel("fortran")


@pytest.mark.skipif(not HAS_COMPILED, reason="compiled kernel not built")
def test_compiled_backend_selectable():
    assert callable(get_kernel("cython").pgs_run)
    assert get_kernel("cython") is not get_kernel("python")


@pytest.mark.skipif(not HAS_COMPILED, reason="compiled kernel not built")
def test_backends_agree_on_random_problems(rng):
    for _ in range(100):
        n = int(rng.integers(1, 13))
        c = gen_contact(n, rng)
        fast = solve_structured(c, PgsOptions(backend="cython"))
        pure = solve_structured(c, PgsOptions(backend="python"))
        scale = 1.0 + np.max(np.abs(fast.d))
        assert np.max(np.abs(fast.d - pure.d)) <= 1e-12 * scale
        assert fast.sweeps >= 1 and pure.sweeps >= 1


@pytest.mark.skipif(not HAS_COMPILED, reason="compiled kernel not built")
def test_backends_agree_on_reference_problem(contact_2d):
    fast = solve_structured(contact_2d, PgsOptions(backend="cython"))
    pure = solve_structured(contact_2d, PgsOptions(backend="python"))
    assert np.max(np.abs(fast.d - pure.d)) <= 1e-14
