"""Discrete Sugeno integral and the Sugeno-type matrix trace.

Max-min counterpart of the Choquet machinery: sums become maxima, products
become minima.  The matrix trace caps the decreasing eigenvalue list with
the alpha weights and takes the best level.
"""

import numpy as np

from nltrace.errors import DimensionMismatch, PreconditionError
from nltrace.measures import AlphaWeights, MonotoneMeasure
from nltrace.choquet import _as_value_vector
from nltrace.spectral import eig_desc_psd


def sugeno_sum_desc(values_desc: np.ndarray, alpha: AlphaWeights) -> float:
    """max_i min(x_i, alpha(i)) for an already-descending value list."""
    n = values_desc.size
    if alpha.n != n:
        raise DimensionMismatch(f"alpha is for n={alpha.n}, values have n={n}")
    return float(np.max(np.minimum(values_desc, alpha.alpha[1:])))


def sugeno_integral(x, mu: MonotoneMeasure) -> float:
    """Sugeno integral of a nonnegative vector against a monotone measure."""
    v = _as_value_vector(x)
    if v.size != mu.n:
        raise DimensionMismatch(f"vector of length {v.size} vs measure on n={mu.n}")
    order = np.argsort(-v, kind="stable")
    best = 0.0
    mask = 0
    for idx in order:
        mask |= 1 << int(idx)
        best = max(best, min(float(v[idx]), float(mu.table[mask])))
    return best


def sugeno_trace(a, alpha: AlphaWeights) -> float:
    """Sugeno-type trace of a PSD matrix: max-min over its spectrum.

    Bounded by min(largest eigenvalue, alpha(n)); saturates at alpha(n) on
    large multiples of the identity.
    """
    spec = eig_desc_psd(a)
    return sugeno_sum_desc(spec.eigenvalues, alpha)


def fuzzy_meet_scalar(a, k: float) -> np.ndarray:
    """Functional calculus x -> min(k, x) on a PSD matrix.

    The matrix analogue of capping at level k; eigenvalues become
    min(k, lambda_i).
    """
    if not np.isfinite(k) or k < 0:
        raise PreconditionError(f"cap level must be a nonnegative real, got {k!r}")
    spec = eig_desc_psd(a)
    capped = np.minimum(spec.eigenvalues, float(k))
    u = spec.unitary
    out = (u * capped) @ u.conj().T
    return 0.5 * (out + out.conj().T)
