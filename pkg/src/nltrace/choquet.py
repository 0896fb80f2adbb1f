"""Discrete Choquet integral and the Choquet-type matrix trace.

The scalar integral sorts the input descending and weights the successive
drops by the measure of the growing level sets.  The matrix trace applies
the same formula to the decreasing eigenvalue list of a PSD matrix against
a permutation-invariant measure given by alpha weights.
"""

import numpy as np

from nltrace.errors import AlignmentError, DimensionMismatch, PreconditionError
from nltrace.measures import AlphaWeights, MonotoneMeasure
from nltrace.spectral import SpectralFunction, eig_desc_psd

COMONOTONIC_TOL = -1e-12


def _as_value_vector(x) -> np.ndarray:
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1 or v.size == 0:
        raise PreconditionError("value vector must be 1-d and nonempty")
    if not np.all(np.isfinite(v)) or np.any(v < 0):
        raise PreconditionError("value vector entries must be finite and nonnegative")
    return v


def choquet_sum_desc(values_desc: np.ndarray, alpha: AlphaWeights) -> float:
    """Choquet formula for an already-descending value list against alpha.

    sum_i (x_i - x_{i+1}) alpha(i) + x_n alpha(n); tie order is irrelevant
    because equal values contribute zero difference terms.
    """
    n = values_desc.size
    if alpha.n != n:
        raise DimensionMismatch(f"alpha is for n={alpha.n}, values have n={n}")
    total = 0.0
    for i in range(n - 1):
        total += (values_desc[i] - values_desc[i + 1]) * alpha.alpha[i + 1]
    total += values_desc[n - 1] * alpha.alpha[n]
    return float(total)


def choquet_integral(x, mu: MonotoneMeasure) -> float:
    """Choquet integral of a nonnegative vector against a monotone measure."""
    v = _as_value_vector(x)
    if v.size != mu.n:
        raise DimensionMismatch(f"vector of length {v.size} vs measure on n={mu.n}")
    order = np.argsort(-v, kind="stable")
    total = 0.0
    mask = 0
    for i, idx in enumerate(order):
        mask |= 1 << int(idx)
        if i < v.size - 1:
            total += (v[order[i]] - v[order[i + 1]]) * mu.table[mask]
        else:
            total += v[order[i]] * mu.table[mask]
    return float(total)


def choquet_trace(a, alpha: AlphaWeights) -> float:
    """Choquet-type trace of a PSD matrix: the integral of its spectrum.

    Equals sum_i c_i lambda_i(a) for the coefficient vector c of successive
    alpha differences.
    """
    spec = eig_desc_psd(a)
    return choquet_sum_desc(spec.eigenvalues, alpha)


def are_comonotonic(f: SpectralFunction, g: SpectralFunction) -> bool:
    """No pair of points on which f and g move in opposite directions.

    (f(s) - f(t)) (g(s) - g(t)) >= -1e-12 for all cluster pairs (s, t).
    """
    if f.values.size != g.values.size:
        raise AlignmentError(
            f"comonotonicity needs equal lengths, got {f.values.size} and {g.values.size}"
        )
    df = f.values[:, None] - f.values[None, :]
    dg = g.values[:, None] - g.values[None, :]
    return bool(np.all(df * dg >= COMONOTONIC_TOL))


def random_comonotonic_pair(clusters: int, rng: np.random.Generator):
    """Random nonnegative comonotonic pair on a given number of clusters.

    Both functions are random increasing maps composed with one shared
    random sequence, so the pair is comonotonic by construction.
    """
    if clusters < 1:
        raise PreconditionError("need at least one cluster")
    base = rng.standard_normal(clusters)
    ranks = np.argsort(np.argsort(base, kind="stable"), kind="stable")
    f_sorted = np.cumsum(rng.uniform(0.0, 1.0, clusters))
    g_sorted = np.cumsum(rng.uniform(0.0, 1.0, clusters))
    return (
        SpectralFunction(values=f_sorted[ranks]),
        SpectralFunction(values=g_sorted[ranks]),
    )
