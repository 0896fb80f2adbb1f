"""Monotone measures on finite sets and weight sequences.

A permutation-invariant monotone measure on {1,...,n} is the same thing as
a monotone weight sequence alpha(0..n) with alpha(0) = 0; the conversions
both ways live here, together with the isomorphism between weight
sequences and nonnegative coefficient vectors via successive differences.

Subsets of {1,...,n} are encoded as n-bit masks: element j corresponds to
bit (j - 1).  The full value table is stored explicitly, which caps the
ground set at n = 20.
"""

from dataclasses import dataclass

import numpy as np

from nltrace.errors import PreconditionError, SizeError

MAX_GROUND_SET = 20
_CHECK_TOL = 1e-12


@dataclass(frozen=True)
class AlphaWeights:
    """Monotone nondecreasing weights alpha(0..n) with alpha(0) = 0."""

    alpha: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.alpha, dtype=np.float64)
        if a.ndim != 1 or a.size < 2:
            raise PreconditionError("alpha needs entries for 0..n with n >= 1")
        if not np.all(np.isfinite(a)):
            raise PreconditionError("alpha entries must be finite")
        if abs(a[0]) > _CHECK_TOL:
            raise PreconditionError(f"alpha(0) must be 0, got {a[0]!r}")
        if np.any(np.diff(a) < -_CHECK_TOL):
            raise PreconditionError("alpha must be monotone nondecreasing")
        if np.any(a < -_CHECK_TOL):
            raise PreconditionError("alpha entries must be nonnegative")
        object.__setattr__(self, "alpha", a)

    @property
    def n(self) -> int:
        return self.alpha.size - 1

    def __getitem__(self, i: int) -> float:
        return float(self.alpha[i])


def _popcounts(size: int) -> np.ndarray:
    """Popcount of every mask in [0, size); size a power of two."""
    pc = np.zeros(size, dtype=np.int64)
    block = 1
    while block < size:
        pc[block : 2 * block] = pc[:block] + 1
        block *= 2
    return pc


class MonotoneMeasure:
    """Set function on subsets of {1,...,n}: empty set to 0, monotone.

    The value table is indexed by bit mask.  Monotonicity is validated at
    construction via all single-element extensions (A vs A + {j}), which
    chains to full monotonicity.
    """

    def __init__(self, n: int, table):
        if n < 1:
            raise SizeError("ground set must have at least one element")
        if n > MAX_GROUND_SET:
            raise SizeError(f"ground set size {n} exceeds the cap {MAX_GROUND_SET}")
        t = np.asarray(table, dtype=np.float64)
        if t.shape != (1 << n,):
            raise PreconditionError(
                f"value table must have 2^{n} entries, got shape {t.shape}"
            )
        if not np.all(np.isfinite(t)):
            raise PreconditionError("measure values must be finite")
        if abs(t[0]) > _CHECK_TOL:
            raise PreconditionError("measure of the empty set must be 0")
        if np.any(t < -_CHECK_TOL):
            raise PreconditionError("measure values must be nonnegative")
        masks = np.arange(1 << n)
        for j in range(n):
            without = masks[(masks >> j) & 1 == 0]
            if np.any(t[without] > t[without | (1 << j)] + _CHECK_TOL):
                raise PreconditionError(
                    f"measure not monotone under adding element {j + 1}"
                )
        self.n = n
        self.table = t

    def value(self, mask: int) -> float:
        """Measure of the subset encoded by ``mask``."""
        if not 0 <= mask < (1 << self.n):
            raise PreconditionError(f"mask {mask} out of range for n={self.n}")
        return float(self.table[mask])

    def total(self) -> float:
        """Measure of the full ground set."""
        return float(self.table[-1])


def measure_from_alpha(alpha: AlphaWeights) -> MonotoneMeasure:
    """Permutation-invariant measure with value alpha(|A|) on every subset A."""
    n = alpha.n
    if n > MAX_GROUND_SET:
        raise SizeError(f"ground set size {n} exceeds the cap {MAX_GROUND_SET}")
    return MonotoneMeasure(n, alpha.alpha[_popcounts(1 << n)])


def alpha_from_measure(mu: MonotoneMeasure) -> AlphaWeights:
    """Weights alpha(i) = mu({1,...,i}) read off the nested prefix sets."""
    prefix_masks = [(1 << i) - 1 for i in range(mu.n + 1)]
    return AlphaWeights(mu.table[prefix_masks])


def alpha_to_coeffs(alpha: AlphaWeights) -> np.ndarray:
    """Successive differences c_i = alpha(i) - alpha(i-1), all nonnegative."""
    return np.diff(alpha.alpha)


def coeffs_to_alpha(c) -> AlphaWeights:
    """Partial sums alpha(j) = c_1 + ... + c_j (left-to-right order)."""
    c = np.asarray(c, dtype=np.float64)
    if c.ndim != 1 or c.size == 0:
        raise PreconditionError("coefficient vector must be 1-d and nonempty")
    if not np.all(np.isfinite(c)) or np.any(c < 0):
        raise PreconditionError("coefficients must be finite and nonnegative")
    alpha = np.zeros(c.size + 1)
    np.cumsum(c, out=alpha[1:])
    return AlphaWeights(alpha)


def is_concave(alpha: AlphaWeights) -> bool:
    """alpha(i+1) + alpha(i-1) <= 2 alpha(i) everywhere (1e-12 slack).

    Equivalent to the coefficient vector being nonincreasing.
    """
    a = alpha.alpha
    return bool(np.all(a[2:] + a[:-2] <= 2.0 * a[1:-1] + _CHECK_TOL))
