"""Hermitian eigendecomposition and positive-semidefinite calculus.

Everything downstream (traces, norms, majorization, block positivity) is
built on the primitives here: descending eigensystems, spectral clustering,
functional calculus, PSD square roots and singular values.

The eigensolver is a cyclic complex Jacobi iteration (see ``_kernels``),
chosen for its self-contained accuracy on the small dense matrices this
library targets (n up to a few hundred).
"""

from dataclasses import dataclass

import numpy as np

from nltrace import config
from nltrace._kernels import jacobi_eigh
from nltrace.errors import (
    AlignmentError,
    DimensionMismatch,
    NonConvergence,
    NonHermitian,
    NotPSD,
)


def as_complex_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce to a finite square complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {m.shape}")
    if m.shape[0] == 0:
        raise DimensionMismatch(f"{name} must be at least 1x1")
    if not np.all(np.isfinite(m)):
        raise NonHermitian(f"{name} contains non-finite entries")
    return m


def check_hermitian(a, name: str = "matrix") -> np.ndarray:
    """Validate Hermitian symmetry within 1e-12 * (1 + max|entry|)."""
    m = as_complex_matrix(a, name)
    scale = 1.0 + float(np.max(np.abs(m))) if m.size else 1.0
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > config.HERMITIAN_TOL * scale:
        raise NonHermitian(
            f"{name} is not Hermitian: max asymmetry {dev:.3e} "
            f"exceeds {config.HERMITIAN_TOL * scale:.3e}"
        )
    return m


@dataclass(frozen=True)
class SpectrumDecomposition:
    """Eigenvalues in decreasing order plus a diagonalizing unitary.

    Satisfies a = unitary @ diag(eigenvalues) @ unitary*.
    """

    eigenvalues: np.ndarray
    unitary: np.ndarray

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> np.ndarray:
        u = self.unitary
        return (u * self.eigenvalues) @ u.conj().T


@dataclass(frozen=True)
class SpectralFunction:
    """Real values of a function on a spectrum, one per eigenvalue cluster.

    Values are aligned to the decreasing cluster order produced by
    :func:`distinct_clusters` at ``cluster_tolerance``.
    """

    values: np.ndarray
    cluster_tolerance: float = config.CLUSTER_TOL

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim != 1 or v.size == 0:
            raise AlignmentError("spectral function needs a 1-d value list")
        if not np.all(np.isfinite(v)):
            raise AlignmentError("spectral function values must be finite")
        object.__setattr__(self, "values", v)


def eig_desc(a) -> SpectrumDecomposition:
    """Full Hermitian eigensystem, eigenvalues sorted in decreasing order.

    Ties keep the solver output order (stable sort).  Raises NonConvergence
    if the Jacobi iteration does not reach its threshold within the sweep
    budget, and NonHermitian for asymmetric input.
    """
    m = check_hermitian(a)
    work = m.copy()
    off_tol = config.EIG_OFF_TOL * (1.0 + float(np.linalg.norm(m, "fro")))
    w, v, sweeps, converged = jacobi_eigh(work, off_tol, config.EIG_MAX_SWEEPS)
    if not converged:
        raise NonConvergence(
            f"Jacobi sweep budget ({config.EIG_MAX_SWEEPS}) exhausted at n={m.shape[0]}"
        )
    order = np.argsort(-w, kind="stable")
    return SpectrumDecomposition(eigenvalues=w[order], unitary=v[:, order])


def distinct_clusters(spec: SpectrumDecomposition, tol: float = config.CLUSTER_TOL):
    """Merge near-equal eigenvalues into (value, multiplicity) clusters.

    Consecutive eigenvalues closer than ``tol * (1 + |largest|)`` join one
    cluster whose value is the mean of its members.  Decreasing order is
    preserved.
    """
    if tol < 0:
        raise ValueError("cluster tolerance must be nonnegative")
    w = spec.eigenvalues
    thr = tol * (1.0 + abs(float(w[0])))
    clusters = []
    start = 0
    for i in range(1, w.size + 1):
        if i == w.size or (w[i - 1] - w[i]) > thr:
            members = w[start:i]
            clusters.append((float(np.mean(members)), int(members.size)))
            start = i
    return clusters


def apply_spectral_function(
    spec: SpectrumDecomposition, f: SpectralFunction
) -> np.ndarray:
    """Functional calculus: map each eigenvalue to its cluster's value.

    Returns u diag(f(lambda_1), ..., f(lambda_n)) u*, which is Hermitian.
    Raises AlignmentError when the value list does not match the cluster
    count at the function's tolerance.
    """
    clusters = distinct_clusters(spec, f.cluster_tolerance)
    if len(clusters) != f.values.size:
        raise AlignmentError(
            f"{f.values.size} values for {len(clusters)} eigenvalue clusters"
        )
    per_eig = np.repeat(f.values, [mult for _, mult in clusters])
    u = spec.unitary
    out = (u * per_eig) @ u.conj().T
    return 0.5 * (out + out.conj().T)


def clamp_psd_eigenvalues(w: np.ndarray) -> np.ndarray:
    """Zero out roundoff-negative eigenvalues; reject genuinely indefinite ones.

    The floor is -1e-9 * (1 + lambda_max): values in [floor, 0) clamp to 0,
    anything below raises NotPSD.
    """
    floor = -config.PSD_FLOOR_TOL * (1.0 + float(w[0]))
    if float(w[-1]) < floor:
        raise NotPSD(
            f"eigenvalue {float(w[-1]):.6e} below the clamping floor {floor:.3e}"
        )
    return np.maximum(w, 0.0)


def eig_desc_psd(a) -> SpectrumDecomposition:
    """Eigensystem of a PSD matrix with roundoff clamping applied."""
    spec = eig_desc(a)
    return SpectrumDecomposition(
        eigenvalues=clamp_psd_eigenvalues(spec.eigenvalues), unitary=spec.unitary
    )


def psd_sqrt(a) -> np.ndarray:
    """Positive square root of a PSD matrix."""
    spec = eig_desc_psd(a)
    u = spec.unitary
    out = (u * np.sqrt(spec.eigenvalues)) @ u.conj().T
    return 0.5 * (out + out.conj().T)


def abs_matrix(a) -> np.ndarray:
    """|a| = (a* a)^(1/2); its eigenvalues are the singular values of a."""
    m = as_complex_matrix(a)
    return psd_sqrt(m.conj().T @ m)


def singular_values(a) -> np.ndarray:
    """Singular values of a square matrix, decreasing.

    Computed from the Hermitian dilation (0, a; a*, 0), whose eigenvalues
    are the singular values in +/- pairs.  Unlike square-rooting the
    eigenvalues of a* a, this keeps full absolute accuracy on small
    singular values.
    """
    m = as_complex_matrix(a)
    n = m.shape[0]
    dilation = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    dilation[:n, n:] = m
    dilation[n:, :n] = m.conj().T
    spec = eig_desc(dilation)
    return np.maximum(spec.eigenvalues[:n], 0.0)
