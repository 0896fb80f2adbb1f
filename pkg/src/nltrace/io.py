"""JSON schemas for matrices, weight sequences and measures.

matrix   {"n": n, "entries": [[[re, im], ...], ...]}
alpha    {"alpha": [0, a1, ..., an]}
measure  {"n": n, "values": {"<bitmask as decimal string>": v, ...}}
         with the empty set omitted (implied 0).

All output numbers use Python's shortest round-trip float formatting, so
identical data serializes to identical bytes.
"""

import json

import numpy as np

from nltrace.errors import PreconditionError
from nltrace.measures import AlphaWeights, MonotoneMeasure


class ParseError(Exception):
    """Input file is not valid JSON or does not match its schema."""


def matrix_to_dict(m: np.ndarray) -> dict:
    n = m.shape[0]
    return {
        "n": n,
        "entries": [
            [[float(m[i, j].real), float(m[i, j].imag)] for j in range(n)]
            for i in range(n)
        ],
    }


def matrix_from_dict(obj) -> np.ndarray:
    if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
        raise ParseError("matrix object needs keys 'n' and 'entries'")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"matrix size must be a positive integer, got {n!r}")
    entries = obj["entries"]
    try:
        arr = np.asarray(entries, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"matrix entries are not numeric: {exc}") from exc
    if arr.shape != (n, n, 2):
        raise ParseError(
            f"matrix entries must be {n}x{n} pairs [re, im], got shape {arr.shape}"
        )
    if not np.all(np.isfinite(arr)):
        raise ParseError("matrix entries must be finite")
    return arr[..., 0] + 1j * arr[..., 1]


def alpha_to_dict(alpha: AlphaWeights) -> dict:
    return {"alpha": [float(x) for x in alpha.alpha]}


def alpha_from_dict(obj) -> AlphaWeights:
    if not isinstance(obj, dict) or "alpha" not in obj:
        raise ParseError("alpha object needs key 'alpha'")
    values = obj["alpha"]
    if not isinstance(values, list) or not all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in values
    ):
        raise ParseError("'alpha' must be a list of numbers")
    return AlphaWeights(np.asarray(values, dtype=np.float64))


def measure_to_dict(mu: MonotoneMeasure) -> dict:
    return {
        "n": mu.n,
        "values": {str(mask): float(mu.table[mask]) for mask in range(1, 1 << mu.n)},
    }


def measure_from_dict(obj) -> MonotoneMeasure:
    if not isinstance(obj, dict) or "n" not in obj or "values" not in obj:
        raise ParseError("measure object needs keys 'n' and 'values'")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"ground set size must be a positive integer, got {n!r}")
    raw = obj["values"]
    if not isinstance(raw, dict):
        raise ParseError("'values' must map bitmask strings to numbers")
    table = np.zeros(1 << n)
    seen = set()
    for key, value in raw.items():
        try:
            mask = int(key)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad bitmask key {key!r}") from exc
        if not 0 <= mask < (1 << n):
            raise ParseError(f"bitmask {mask} out of range for n={n}")
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ParseError(f"value for mask {mask} is not a number")
        table[mask] = float(value)
        seen.add(mask)
    missing = (1 << n) - 1 - len(seen - {0})
    if missing:
        raise ParseError(f"{missing} nonempty subsets have no value")
    return MonotoneMeasure(n, table)


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def load_matrix(path: str) -> np.ndarray:
    return matrix_from_dict(load_json(path))


def load_alpha(path: str) -> AlphaWeights:
    try:
        return alpha_from_dict(load_json(path))
    except PreconditionError as exc:
        raise ParseError(f"invalid alpha in {path}: {exc}") from exc


def load_measure(path: str) -> MonotoneMeasure:
    try:
        return measure_from_dict(load_json(path))
    except PreconditionError as exc:
        raise ParseError(f"invalid measure in {path}: {exc}") from exc


def dumps(obj) -> str:
    """Deterministic JSON text: fixed separators, insertion key order."""
    return json.dumps(obj, separators=(", ", ": "))
