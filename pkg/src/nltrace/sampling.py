"""Seeded random generators for matrices, weights and test instances.

All randomness flows from explicit 64-bit seeds through counter-based
Philox streams: the stream for a sample is
``Philox(key=(seed, crc32(stream_name)), counter=(sample_index, 0, 0, 0))``.
Streams for different samples are independent, so serial and partitioned
runs of a suite see identical draws.
"""

import zlib

import numpy as np

from nltrace.measures import AlphaWeights
from nltrace.spectral import singular_values


def stream(seed: int, name: str, index: int) -> np.random.Generator:
    """Independent generator for one named sample of one suite run."""
    key = [np.uint64(seed & 0xFFFFFFFFFFFFFFFF), np.uint64(zlib.crc32(name.encode()))]
    counter = [np.uint64(index), np.uint64(0), np.uint64(0), np.uint64(0)]
    return np.random.Generator(np.random.Philox(counter=counter, key=key))


def random_complex(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * g


def random_hermitian(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    g = random_complex(n, rng, scale)
    return 0.5 * (g + g.conj().T)


def random_psd(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    g = random_complex(n, rng, scale) / np.sqrt(n)
    return g @ g.conj().T


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    q, r = np.linalg.qr(random_complex(n, rng))
    phases = np.diag(r).copy()
    phases /= np.abs(phases)
    return q * phases


def random_contraction(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random matrix scaled to unit top singular value, then shrunk by U[0,1]."""
    g = random_complex(n, rng)
    top = float(singular_values(g)[0])
    if top == 0.0:
        return g
    return g * (rng.uniform(0.0, 1.0) / top)


def random_alpha(n: int, rng: np.random.Generator) -> AlphaWeights:
    """Monotone weights from nonnegative uniform increments."""
    return AlphaWeights(np.concatenate(([0.0], np.cumsum(rng.uniform(0.0, 1.0, n)))))


def random_concave_alpha(n: int, rng: np.random.Generator) -> AlphaWeights:
    """Concave weights: increments sorted decreasing, first one positive."""
    c = np.sort(rng.uniform(0.0, 1.0, n))[::-1]
    c[0] = max(c[0], 0.1)
    return AlphaWeights(np.concatenate(([0.0], np.cumsum(c))))


def random_nonconcave_alpha(n: int, rng: np.random.Generator) -> AlphaWeights:
    """Weights with at least one increasing coefficient step and alpha(1) > 0.

    Needs n >= 2: one position k is forced to satisfy c_k < c_{k+1}.
    """
    if n < 2:
        raise ValueError("non-concave weights need n >= 2")
    c = rng.uniform(0.1, 1.0, n)
    k = int(rng.integers(0, n - 1))
    c[k + 1] = c[k] * float(rng.uniform(1.5, 3.0)) + 0.1
    return AlphaWeights(np.concatenate(([0.0], np.cumsum(c))))
