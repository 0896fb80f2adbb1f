"""Numeric tolerances used across the package.

Most tolerances are fixed contracts of individual operations.  The generic
comparison tolerance (default 1e-8) that the property suites and the CLI use
for approximate equality can be overridden through the ``NLTRACE_TOL``
environment variable.
"""

import os

DEFAULT_COMPARISON_TOL = 1e-8

HERMITIAN_TOL = 1e-12
EIG_OFF_TOL = 1e-12
EIG_MAX_SWEEPS = 100
PSD_FLOOR_TOL = 1e-9
CLUSTER_TOL = 1e-8
PINV_CUT = 1e-10


def comparison_tol() -> float:
    """Generic comparison tolerance; honors the NLTRACE_TOL override."""
    raw = os.environ.get("NLTRACE_TOL")
    if raw is None:
        return DEFAULT_COMPARISON_TOL
    try:
        value = float(raw)
    except ValueError:
        return DEFAULT_COMPARISON_TOL
    return value if value > 0 else DEFAULT_COMPARISON_TOL
