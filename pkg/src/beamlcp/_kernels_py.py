"""Pure-Python fallback for the Gauss-Seidel sweep kernel.

Semantics match ``beamlcp._kernels`` (the compiled version); floating-point
results may differ at rounding level because the row products here use
numpy's dot instead of a sequential C loop.
"""

from __future__ import annotations

import numpy as np


def pgs_run(K, c, two_y, d, tol: float, max_sweeps: int):
    """Run Gauss-Seidel sweeps on d in place; return (sweeps, residual)."""
    n = d.shape[0]
    if n == 0:
        return 0, 0.0

    diag = np.einsum("ii->i", np.asarray(K))
    sweep = 0
    residual = np.inf
    while sweep < max_sweeps:
        for i in range(n):
            r = c[i] + float(K[i] @ d) - diag[i] * d[i]
            cand = -r / diag[i]
            if cand > 0.0:
                d[i] = cand
            else:
                cand = (two_y[i] - r) / diag[i]
                d[i] = cand if cand < 0.0 else 0.0
        sweep += 1

        g = K @ d + c
        dist = np.empty(n)
        pos = d > 0.0
        neg = d < 0.0
        zero = ~(pos | neg)
        dist[pos] = np.abs(g[pos])
        dist[neg] = np.abs(g[neg] - two_y[neg])
        lo = g[zero] - two_y[zero]
        hi = g[zero]
        dist[zero] = np.where(lo > 0.0, lo, np.where(hi < 0.0, -hi, 0.0))
        residual = float(dist.max())
        if residual <= tol:
            break

    return sweep, residual
