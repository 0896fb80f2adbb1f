"""Eigensolver kernel selection.

Prefers the compiled Cython kernel and falls back to the pure NumPy twin
when the extension is unavailable.  ``NLTRACE_BACKEND=python`` forces the
fallback (used by the benchmark and backend-equivalence tests).
"""

import os

from nltrace._kernels import _jacobi_py

_forced = os.environ.get("NLTRACE_BACKEND", "").strip().lower()

if _forced == "python":
    jacobi_eigh = _jacobi_py.jacobi_eigh
    BACKEND = _jacobi_py.BACKEND_NAME
else:
    try:
        from nltrace._kernels import _jacobi

        jacobi_eigh = _jacobi.jacobi_eigh
        BACKEND = _jacobi.BACKEND_NAME
    except ImportError:
        jacobi_eigh = _jacobi_py.jacobi_eigh
        BACKEND = _jacobi_py.BACKEND_NAME


def get_backend() -> str:
    """Name of the active eigensolver kernel ("cython" or "python")."""
    return BACKEND
