"""Majorization of real vectors and eigenvalue dominance of PSD matrices.

Includes the constructive side: when every eigenvalue of ``a`` sits below
the corresponding eigenvalue of ``b``, a contraction c with a = c b c* is
assembled from the two eigenbases and the square-rooted eigenvalue ratios.
"""

import numpy as np

from nltrace import config
from nltrace.errors import DegenerateRatio, DimensionMismatch, NotDominated
from nltrace.spectral import eig_desc_psd

PARTIAL_SUM_TOL = 1e-10


def decreasing_rearrangement(x) -> np.ndarray:
    """Entries sorted in decreasing order."""
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1:
        raise DimensionMismatch("expected a 1-d vector")
    return np.sort(v)[::-1]


def weak_majorizes(y, x) -> bool:
    """True when x is weakly majorized by y (partial sums of x below y's)."""
    xs = decreasing_rearrangement(x)
    ys = decreasing_rearrangement(y)
    if xs.size != ys.size:
        raise DimensionMismatch(f"lengths differ: {xs.size} vs {ys.size}")
    return bool(np.all(np.cumsum(xs) <= np.cumsum(ys) + PARTIAL_SUM_TOL))


def majorizes(y, x) -> bool:
    """Weak majorization plus equal totals."""
    if not weak_majorizes(y, x):
        return False
    sx = float(np.sum(np.asarray(x, dtype=np.float64)))
    sy = float(np.sum(np.asarray(y, dtype=np.float64)))
    return abs(sx - sy) <= PARTIAL_SUM_TOL * (1.0 + abs(sy))


def eigen_dominates(b, a) -> bool:
    """lambda_i(a) <= lambda_i(b) for every i, both matrices PSD."""
    sa = eig_desc_psd(a)
    sb = eig_desc_psd(b)
    if sa.n != sb.n:
        raise DimensionMismatch(f"dimensions differ: {sa.n} vs {sb.n}")
    tol = config.comparison_tol() * (1.0 + float(sb.eigenvalues[0]))
    return bool(np.all(sa.eigenvalues <= sb.eigenvalues + tol))


def contraction_factor(a, b) -> np.ndarray:
    """Contraction c with a = c b c* whenever b eigen-dominates a.

    c = u diag(sqrt(lambda_i(a) / lambda_i(b))) v* with u, v the
    descending eigenbases of a and b.  Ratios at eigenvalues below the PSD
    floor are set to 0 (dominance forces the numerator down there too).
    Guarantees operator norm <= 1 and Frobenius reconstruction error
    <= 1e-7 * (1 + ||b||_F).
    """
    sa = eig_desc_psd(a)
    sb = eig_desc_psd(b)
    if sa.n != sb.n:
        raise DimensionMismatch(f"dimensions differ: {sa.n} vs {sb.n}")
    if not eigen_dominates(b, a):
        raise NotDominated("b does not eigen-dominate a")
    floor_a = config.PSD_FLOOR_TOL * (1.0 + float(sa.eigenvalues[0]))
    floor_b = config.PSD_FLOOR_TOL * (1.0 + float(sb.eigenvalues[0]))
    d = np.zeros(sa.n)
    for i in range(sa.n):
        la = float(sa.eigenvalues[i])
        lb = float(sb.eigenvalues[i])
        if lb <= floor_b:
            if la > floor_a:
                raise DegenerateRatio(
                    f"lambda_{i + 1}(b) is at the floor but lambda_{i + 1}(a) is not"
                )
            d[i] = 0.0
        else:
            # Dominance tolerance may push the ratio a hair over 1.
            d[i] = min(1.0, np.sqrt(la / lb))
    return (sa.unitary * d) @ sb.unitary.conj().T
