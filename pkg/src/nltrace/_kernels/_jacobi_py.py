"""Cyclic Jacobi eigensolver for Hermitian matrices, pure NumPy version.

Same algorithm as the compiled twin in ``_jacobi.pyx``: cyclic sweeps over
the upper triangle, each pivot annihilated by a complex plane rotation
(phase factor times a real Givens rotation).  Kept in lockstep with the
compiled kernel so the two backends are interchangeable.
"""

import numpy as np

BACKEND_NAME = "python"


def _offdiag_frobenius(a: np.ndarray) -> float:
    iu = np.triu_indices(a.shape[0], 1)
    return float(np.sqrt(2.0 * np.sum(np.abs(a[iu]) ** 2)))


def jacobi_eigh(a: np.ndarray, off_tol: float, max_sweeps: int):
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Parameters
    ----------
    a : complex128 square array, modified in place (pass a working copy).
    off_tol : absolute convergence threshold for the off-diagonal
        Frobenius norm.
    max_sweeps : sweep budget.

    Returns
    -------
    (w, v, sweeps, converged) where ``w`` holds the unsorted real diagonal,
    ``v`` the accumulated unitary (columns are eigenvectors, a = v w v*),
    ``sweeps`` the number of full sweeps performed and ``converged`` whether
    the threshold was reached.
    """
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.array([a[0, 0].real]), v, 0, True
    # Pivots below `skip` are left alone: even if all of them survive, the
    # off-diagonal norm stays under off_tol.
    skip = off_tol / (n * n)
    for sweep in range(max_sweeps):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= skip:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                e = apq / r
                theta = (aqq - app) / (2.0 * r)
                t = (1.0 if theta >= 0.0 else -1.0) / (
                    abs(theta) + np.sqrt(theta * theta + 1.0)
                )
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - (s * e) * rq
                a[q, :] = s * rp + (c * e) * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                ec = np.conj(e)
                a[:, p] = c * cp - (s * ec) * cq
                a[:, q] = s * cp + (c * ec) * cq
                # Pivot block is known in closed form; write it exactly.
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - (s * ec) * vq
                v[:, q] = s * vp + (c * ec) * vq
        if _offdiag_frobenius(a) <= off_tol:
            return np.diag(a).real.copy(), v, sweep + 1, True
    return np.diag(a).real.copy(), v, max_sweeps, False
