# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gauss-Seidel sweep for the structured contact solver.

Mirrors ``beamlcp._kernels_py.pgs_run``; the coordinate updates are
inherently sequential, which is why this loop is compiled rather than
vectorized.
"""

from libc.math cimport fabs


def pgs_run(const double[:, ::1] K, const double[::1] c, const double[::1] two_y,
            double[::1] d, double tol, Py_ssize_t max_sweeps):
    """Run Gauss-Seidel sweeps on d in place; return (sweeps, residual).

    Each coordinate takes the exact minimizer of the one-dimensional piece of
    0.5*d'Kd + c'd + sum_i two_y[i]*max(-d[i], 0).  The residual is the
    distance from zero to the coordinatewise subdifferential, evaluated after
    each full sweep.
    """
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t sweep = 0
    cdef Py_ssize_t i, j
    cdef double r, cand, g, lo, res
    cdef double residual = 0.0

    if n == 0:
        return 0, 0.0

    while sweep < max_sweeps:
        for i in range(n):
            r = c[i]
            for j in range(n):
                r += K[i, j] * d[j]
            r -= K[i, i] * d[i]
            cand = -r / K[i, i]
            if cand > 0.0:
                d[i] = cand
            else:
                cand = (two_y[i] - r) / K[i, i]
                d[i] = cand if cand < 0.0 else 0.0
        sweep += 1

        res = 0.0
        for i in range(n):
            g = c[i]
            for j in range(n):
                g += K[i, j] * d[j]
            if d[i] > 0.0:
                g = fabs(g)
            elif d[i] < 0.0:
                g = fabs(g - two_y[i])
            else:
                lo = g - two_y[i]
                if lo > 0.0:
                    g = lo
                elif g < 0.0:
                    g = -g
                else:
                    g = 0.0
            if g > res:
                res = g
        residual = res
        if residual <= tol:
            break

    return sweep, residual
