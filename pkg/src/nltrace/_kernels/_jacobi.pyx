# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cyclic Jacobi eigensolver for Hermitian matrices, compiled kernel.

Algorithm identical to the pure NumPy twin in ``_jacobi_py.py``; see there
for the contract.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

BACKEND_NAME = "cython"


def jacobi_eigh(cnp.ndarray[cnp.complex128_t, ndim=2] a, double off_tol, int max_sweeps):
    cdef Py_ssize_t n = a.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.array([a[0, 0].real]), v, 0, True

    cdef double complex[:, ::1] am = np.ascontiguousarray(a)
    cdef double complex[:, ::1] vm = v
    cdef double skip = off_tol / (n * n)
    cdef Py_ssize_t sweep, p, q, i
    cdef double complex apq, e, ec, tp, tq
    cdef double r, app, aqq, theta, t, c, s, off
    cdef bint converged = False
    cdef int sweeps_done = max_sweeps

    for sweep in range(max_sweeps):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = am[p, q]
                r = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                if r <= skip:
                    continue
                app = am[p, p].real
                aqq = am[q, q].real
                e = apq / r
                theta = (aqq - app) / (2.0 * r)
                t = (1.0 if theta >= 0.0 else -1.0) / (fabs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for i in range(n):
                    tp = am[p, i]
                    tq = am[q, i]
                    am[p, i] = c * tp - (s * e) * tq
                    am[q, i] = s * tp + (c * e) * tq
                ec = e.conjugate()
                for i in range(n):
                    tp = am[i, p]
                    tq = am[i, q]
                    am[i, p] = c * tp - (s * ec) * tq
                    am[i, q] = s * tp + (c * ec) * tq
                am[p, p] = app - t * r
                am[q, q] = aqq + t * r
                am[p, q] = 0.0
                am[q, p] = 0.0
                for i in range(n):
                    tp = vm[i, p]
                    tq = vm[i, q]
                    vm[i, p] = c * tp - (s * ec) * tq
                    vm[i, q] = s * tp + (c * ec) * tq
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = am[p, q]
                off += apq.real * apq.real + apq.imag * apq.imag
        off = sqrt(2.0 * off)
        if off <= off_tol:
            converged = True
            sweeps_done = sweep + 1
            break

    w = np.empty(n, dtype=np.float64)
    out = np.asarray(am)
    for i in range(n):
        w[i] = out[i, i].real
    np.asarray(a)[...] = out
    return w, v, sweeps_done, converged
