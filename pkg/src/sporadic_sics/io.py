"""JSON encodings for matrices and reports."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np


def matrix_to_dict(a: np.ndarray) -> dict:
    """{dim, entries} with entries a row-major list of [re, im] pairs."""
    a = np.asarray(a, dtype=complex)
    return {
        "dim": int(a.shape[0]),
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in a],
    }


def _scalar(value) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    raise ValueError(f"matrix entry must be a number or an [re, im] pair, got {value!r}")


def matrix_from_dict(data: dict) -> np.ndarray:
    if not isinstance(data, dict) or "entries" not in data:
        raise ValueError("matrix document needs an 'entries' field")
    a = np.array([[_scalar(v) for v in row] for row in data["entries"]], dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix is not square: shape {a.shape}")
    if "dim" in data and int(data["dim"]) != a.shape[0]:
        raise ValueError(f"declared dim {data['dim']} does not match {a.shape[0]} rows")
    return a


def load_matrix(path: str | Path) -> np.ndarray:
    with open(path) as fh:
        return matrix_from_dict(json.load(fh))


def _default(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, two-space indent."""
    return json.dumps(obj, default=_default, sort_keys=True, indent=2) + "\n"
