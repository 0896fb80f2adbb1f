"""Alpha-norms, Ky Fan machinery, block positivity and 2-positivity testing.

The alpha-norm of a square matrix is the Choquet-type trace of its absolute
value, i.e. a nonnegative combination of singular values.  Concave weight
sequences decompose into Ky Fan norms; non-concave ones admit constructive
counterexamples to both the triangle inequality and 2-positivity, generated
here as verifiable witness reports.

2-positivity of a functional is tested by sampling block-positive 2x2
operator matrices: a clean pass is statistical evidence, a violation is a
certified counterexample carrying the offending block.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from nltrace import config
from nltrace.choquet import choquet_sum_desc
from nltrace.errors import (
    DimensionMismatch,
    FactorizationFailed,
    NotConcave,
    NotPositive,
    PreconditionError,
    RangeError,
)
from nltrace.measures import AlphaWeights, alpha_to_coeffs
from nltrace.sampling import random_contraction, random_psd, random_unitary, stream
from nltrace.spectral import (
    as_complex_matrix,
    check_hermitian,
    eig_desc,
    eig_desc_psd,
    psd_sqrt,
    singular_values,
)

WEIGHT_TOL = 1e-12
FACTOR_TOL = 1e-7


def alpha_norm(a, alpha: AlphaWeights) -> float:
    """Choquet-type trace of |a|: sum of c_i times the i-th singular value."""
    m = as_complex_matrix(a)
    if alpha.n != m.shape[0]:
        raise DimensionMismatch(
            f"alpha is for n={alpha.n}, matrix has n={m.shape[0]}"
        )
    return choquet_sum_desc(singular_values(m), alpha)


def ky_fan_norm(a, k: int) -> float:
    """Sum of the k largest singular values."""
    m = as_complex_matrix(a)
    n = m.shape[0]
    if not 1 <= k <= n:
        raise RangeError(f"k must be in 1..{n}, got {k}")
    return float(np.sum(singular_values(m)[:k]))


def ky_fan_alpha(n: int, k: int) -> AlphaWeights:
    """Weights (0, 1, ..., k, k, ..., k) whose alpha-norm is the Ky Fan k-norm."""
    if not 1 <= k <= n:
        raise RangeError(f"k must be in 1..{n}, got {k}")
    return AlphaWeights(np.minimum(np.arange(n + 1), k).astype(np.float64))


def ky_fan_decomposition(alpha: AlphaWeights) -> np.ndarray:
    """Nonnegative weights w with alpha_norm = sum_k w_k * ky_fan_norm(., k).

    w_i = c_i - c_{i+1} for i < n and w_n = c_n; requires a concave alpha
    (otherwise some weight would be negative).
    """
    c = alpha_to_coeffs(alpha)
    w = np.empty_like(c)
    w[:-1] = c[:-1] - c[1:]
    w[-1] = c[-1]
    if np.any(w < -WEIGHT_TOL):
        raise NotConcave("weights are not concave: coefficient sequence increases")
    return np.maximum(w, 0.0)


@dataclass(frozen=True)
class Block2:
    """2x2 operator matrix (a, c; c*, b) with Hermitian diagonal blocks."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        a = check_hermitian(self.a, "block a")
        b = check_hermitian(self.b, "block b")
        c = as_complex_matrix(self.c, "block c")
        if not a.shape == b.shape == c.shape:
            raise DimensionMismatch(
                f"block shapes differ: {a.shape}, {b.shape}, {c.shape}"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def n(self) -> int:
        return self.a.shape[0]


def block2_assemble(blk: Block2) -> np.ndarray:
    """The 2n x 2n Hermitian matrix with rows (a, c; c*, b)."""
    return np.block([[blk.a, blk.c], [blk.c.conj().T, blk.b]])


def block2_is_positive(blk: Block2) -> bool:
    """Smallest eigenvalue of the assembled block above the PSD floor."""
    w = eig_desc(block2_assemble(blk)).eigenvalues
    return float(w[-1]) >= -config.PSD_FLOOR_TOL * (1.0 + float(w[0]))


def _pinv_sqrt(m: np.ndarray) -> np.ndarray:
    """Pseudo-inverse of the PSD square root, rank cut at 1e-10 * lambda_max."""
    spec = eig_desc_psd(m)
    w = spec.eigenvalues
    cut = config.PINV_CUT * float(w[0]) if float(w[0]) > 0 else 0.0
    inv = np.where(w > cut, 1.0 / np.sqrt(np.maximum(w, 1e-300)), 0.0)
    u = spec.unitary
    out = (u * inv) @ u.conj().T
    return 0.5 * (out + out.conj().T)


def block2_contraction(blk: Block2) -> np.ndarray:
    """Contraction k with c = a^(1/2) k b^(1/2) for a positive block.

    k is computed through pseudo-inverse square roots, which confines it to
    the ranges of a and b.  Raises NotPositive when the block fails the
    positivity test and FactorizationFailed when the factor does not meet
    the norm or reconstruction guarantees (near-singular range mismatch).
    """
    if not block2_is_positive(blk):
        raise NotPositive("2x2 operator block is not positive semidefinite")
    k = _pinv_sqrt(blk.a) @ blk.c @ _pinv_sqrt(blk.b)
    top = float(singular_values(k)[0])
    if top > 1.0 + FACTOR_TOL:
        raise FactorizationFailed(f"extracted factor has norm {top:.9f} > 1")
    recon = psd_sqrt(blk.a) @ k @ psd_sqrt(blk.b)
    err = float(np.linalg.norm(blk.c - recon, "fro"))
    bound = FACTOR_TOL * (1.0 + float(np.linalg.norm(blk.c, "fro")))
    if err > bound:
        raise FactorizationFailed(
            f"reconstruction error {err:.3e} exceeds {bound:.3e}"
        )
    return k


@dataclass(frozen=True)
class MatrixFunctional:
    """Deterministic scalar functional on square matrices of a fixed size."""

    name: str
    n: int
    fn: Callable[[np.ndarray], complex]

    def __call__(self, m) -> complex:
        return complex(self.fn(m))


def alpha_norm_functional(alpha: AlphaWeights, name: Optional[str] = None) -> MatrixFunctional:
    label = name or f"alpha_norm[{list(alpha.alpha)}]"
    return MatrixFunctional(label, alpha.n, lambda m: alpha_norm(m, alpha))


def ky_fan_functional(n: int, k: int) -> MatrixFunctional:
    return MatrixFunctional(f"ky_fan[{k}]", n, lambda m: ky_fan_norm(m, k))


def singular_value_functional(n: int, i: int) -> MatrixFunctional:
    """The i-th singular value (1-indexed) as a functional on M_n."""
    if not 1 <= i <= n:
        raise RangeError(f"i must be in 1..{n}, got {i}")
    return MatrixFunctional(f"s[{i}]", n, lambda m: float(singular_values(m)[i - 1]))


def coeff_spectral_value(coeffs, m) -> float:
    """s(m) = sum_i c_i * (i-th singular value of m)."""
    c = np.asarray(coeffs, dtype=np.float64)
    s = singular_values(m)
    if c.size != s.size:
        raise DimensionMismatch(f"{c.size} coefficients for n={s.size}")
    return float(np.dot(c, s))


@dataclass
class TwoPositivityReport:
    """Outcome of sampling the 2-positivity criterion for one functional."""

    functional: str
    samples: int
    violations: int
    worst_block: Optional[Block2]
    worst_margin: float

    @property
    def passed(self) -> bool:
        return self.violations == 0


def _two_positive_block_check(phi: MatrixFunctional, blk: Block2, tol: float):
    """Margins of the 2x2 value matrix tests; negative margin = violation."""
    fa = phi(blk.a)
    fb = phi(blk.b)
    fc = phi(blk.c)
    fcs = phi(blk.c.conj().T)
    sym_margin = tol - abs(fcs - np.conj(fc))
    diag_margin = min(
        fa.real + tol,
        fb.real + tol,
        tol - abs(fa.imag),
        tol - abs(fb.imag),
    )
    det = fa.real * fb.real - abs(fc) ** 2
    det_margin = det + tol * (1.0 + fa.real * fb.real)
    return min(sym_margin, diag_margin, det_margin)


def two_positivity_sample_test(
    phi: MatrixFunctional,
    n: int,
    samples: int,
    seed: int,
    forced_blocks: tuple = (),
) -> TwoPositivityReport:
    """Sample block-positive inputs and test the 2x2 value matrix of phi.

    Each sample draws PSD a, b and a contraction k0 and uses
    c = a^(1/2) k0 b^(1/2), which makes the operator block positive by
    construction.  Any block in ``forced_blocks`` is evaluated first (as
    samples 0, 1, ...).  A violation is a failure of Hermitian symmetry,
    diagonal nonnegativity or the determinant bound of the value matrix.
    """
    if samples < 1:
        raise PreconditionError("need at least one sample")
    tol = config.comparison_tol()
    violations = 0
    worst_block = None
    worst_margin = np.inf
    checked = 0

    def consider(blk: Block2):
        nonlocal violations, worst_block, worst_margin, checked
        margin = _two_positive_block_check(phi, blk, tol)
        checked += 1
        if margin < 0:
            violations += 1
        if margin < worst_margin:
            worst_margin = margin
            worst_block = blk

    for blk in forced_blocks:
        consider(blk)
    for i in range(samples):
        rng = stream(seed, f"two_positivity:{phi.name}", i)
        a = random_psd(n, rng)
        b = random_psd(n, rng)
        k0 = random_contraction(n, rng)
        c = psd_sqrt(a) @ k0 @ psd_sqrt(b)
        consider(Block2(a=a, b=b, c=c))
    return TwoPositivityReport(
        functional=phi.name,
        samples=checked,
        violations=violations,
        worst_block=worst_block if violations else None,
        worst_margin=float(worst_margin),
    )


def schwartz_check(phi: MatrixFunctional, a, b) -> bool:
    """|phi(a* b)|^2 <= phi(a* a) phi(b* b) up to the comparison tolerance."""
    am = as_complex_matrix(a)
    bm = as_complex_matrix(b)
    if am.shape != bm.shape:
        raise DimensionMismatch(f"shapes differ: {am.shape} vs {bm.shape}")
    tol = config.comparison_tol()
    lhs = abs(phi(am.conj().T @ bm)) ** 2
    rhs = (phi(am.conj().T @ am) * phi(bm.conj().T @ bm)).real
    return lhs <= rhs + tol * (1.0 + abs(rhs))


@dataclass(frozen=True)
class WitnessReport:
    """Certified 2-positivity counterexample for an increasing coefficient step.

    Diagonal PSD matrices a, b, c form a positive operator block while the
    2x2 value matrix of s(x) = sum_i coeff_i * s_i(x) has negative
    determinant.
    """

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    s_a: float
    s_b: float
    s_c: float
    determinant: float

    def block(self) -> Block2:
        return Block2(a=self.a, b=self.b, c=self.c)


def non_two_positive_witness(coeffs, k: int, t: float) -> WitnessReport:
    """Construct a verified 2-positivity counterexample from c_k < c_{k+1}.

    ``k`` is 1-indexed with k <= n-1; requires t > 1 and
    coeffs[k+1] > sqrt(t) * coeffs[k].  The diagonal matrices use entry t
    before position k, entry 1 after position k+1, and the 2x2 core
    (t, 1) / (1, t) / (sqrt(t), sqrt(t)) at positions k, k+1, which makes
    the operator block positive (c = sqrt(a) sqrt(b) entrywise) while
    swapping enough spectral weight to flip the determinant sign.
    """
    c = np.asarray(coeffs, dtype=np.float64)
    if c.ndim != 1 or c.size < 2:
        raise PreconditionError("need at least two coefficients")
    if not np.all(np.isfinite(c)) or np.any(c < 0):
        raise PreconditionError("coefficients must be finite and nonnegative")
    n = c.size
    if not 1 <= k <= n - 1:
        raise PreconditionError(f"k must be in 1..{n - 1}, got {k}")
    ck, ck1 = float(c[k - 1]), float(c[k])
    if not ck < ck1:
        raise PreconditionError(
            f"need coeff[{k}] < coeff[{k + 1}] (1-indexed), got {ck} >= {ck1}"
        )
    if not (np.isfinite(t) and t > 1.0):
        raise PreconditionError(f"t must exceed 1, got {t!r}")
    if not ck1 > np.sqrt(t) * ck:
        raise PreconditionError(
            f"need coeff[{k + 1}] > sqrt(t) * coeff[{k}]: {ck1} <= {np.sqrt(t) * ck}"
        )
    da = np.ones(n)
    db = np.ones(n)
    dc = np.ones(n)
    da[: k - 1] = db[: k - 1] = dc[: k - 1] = t
    da[k - 1], da[k] = t, 1.0
    db[k - 1], db[k] = 1.0, t
    dc[k - 1] = dc[k] = np.sqrt(t)
    a_mat = np.diag(da).astype(np.complex128)
    b_mat = np.diag(db).astype(np.complex128)
    c_mat = np.diag(dc).astype(np.complex128)
    s_a = coeff_spectral_value(c, a_mat)
    s_b = coeff_spectral_value(c, b_mat)
    s_c = coeff_spectral_value(c, c_mat)
    det = s_a * s_b - s_c**2
    if det >= 0 or not block2_is_positive(Block2(a=a_mat, b=b_mat, c=c_mat)):
        raise FactorizationFailed(
            "witness construction failed its own verification"
        )
    return WitnessReport(
        a=a_mat, b=b_mat, c=c_mat, s_a=s_a, s_b=s_b, s_c=s_c, determinant=det
    )


def pick_witness_scale(coeffs, k: int) -> float:
    """A valid t for non_two_positive_witness at the 1-indexed step k."""
    c = np.asarray(coeffs, dtype=np.float64)
    ck, ck1 = float(c[k - 1]), float(c[k])
    if not ck < ck1:
        raise PreconditionError(f"coeff[{k}] < coeff[{k + 1}] required")
    if ck <= 0:
        return 4.0
    ratio_sq = (ck1 / ck) ** 2
    return 1.0 + 0.5 * (ratio_sq - 1.0)


def projection_splitting_pairs(n: int):
    """Triangle-inequality probes from splitting sums of projections.

    For each level i the pair (x, y) of diagonal 0/1 matrices of rank i
    overlapping in i - 1 positions; the alpha-norm triangle inequality on
    x + y forces the concavity inequality at i, so any concavity failure
    shows up as a triangle violation on one of these pairs.
    """
    pairs = []
    for i in range(1, n):
        dx = np.zeros(n)
        dy = np.zeros(n)
        dx[0] = 1.0
        dy[1] = 1.0
        dx[2 : i + 1] = 1.0
        dy[2 : i + 1] = 1.0
        pairs.append((np.diag(dx).astype(np.complex128), np.diag(dy).astype(np.complex128)))
    return pairs


@dataclass
class NormAxiomReport:
    """Violation counts from sampling the norm axioms of an alpha-norm."""

    samples: int
    triangle_violations: int = 0
    homogeneity_violations: int = 0
    definiteness_violations: int = 0
    unitary_violations: int = 0
    worst_triangle_margin: float = field(default=np.inf)

    @property
    def total_violations(self) -> int:
        return (
            self.triangle_violations
            + self.homogeneity_violations
            + self.definiteness_violations
            + self.unitary_violations
        )

    @property
    def passed(self) -> bool:
        return self.total_violations == 0


def norm_axiom_check(alpha: AlphaWeights, n_samples: int, seed: int) -> NormAxiomReport:
    """Sample the norm axioms of the alpha-norm on all of M_n.

    Requires alpha(1) > 0 (otherwise rank-deficient matrices break
    definiteness outright).  The projection-splitting probes are always
    evaluated first, so a concavity failure is reported deterministically;
    random pairs follow.  Checks: triangle inequality, absolute
    homogeneity over complex scalars, definiteness, and two-sided unitary
    invariance.
    """
    if alpha[1] <= 0:
        raise PreconditionError("norm axioms need alpha(1) > 0")
    if n_samples < 1:
        raise PreconditionError("need at least one sample")
    n = alpha.n
    tol = config.comparison_tol()
    report = NormAxiomReport(samples=0)

    def norm(m):
        return alpha_norm(m, alpha)

    def check_pair(a, b, rng):
        na, nb = norm(a), norm(b)
        nsum = norm(a + b)
        margin = na + nb + tol * (1.0 + na + nb) - nsum
        if margin < 0:
            report.triangle_violations += 1
        report.worst_triangle_margin = min(report.worst_triangle_margin, margin)
        z = complex(rng.standard_normal(), rng.standard_normal())
        if abs(norm(z * a) - abs(z) * na) > tol * (1.0 + abs(z) * na):
            report.homogeneity_violations += 1
        if np.any(a != 0) and not na > 0:
            report.definiteness_violations += 1
        u = random_unitary(n, rng)
        v = random_unitary(n, rng)
        if abs(norm(u @ a @ v) - na) > tol * (1.0 + na):
            report.unitary_violations += 1
        report.samples += 1

    for idx, (x, y) in enumerate(projection_splitting_pairs(n)):
        check_pair(x, y, stream(seed, "norm_axiom_probe", idx))
    for i in range(n_samples):
        rng = stream(seed, "norm_axiom", i)
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        b = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        check_pair(a, b, rng)
    return report
