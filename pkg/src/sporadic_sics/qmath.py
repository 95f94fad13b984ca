"""Small dense complex linear algebra shared by every other module.

Kets are 1-D complex numpy arrays and operators are square 2-D complex
arrays. Tensor products put the most significant index on the left, so
``tensor(X, Y, Z)`` acts as X on qubit 1, Y on qubit 2 and Z on qubit 3.
"""

from __future__ import annotations

import os
from functools import reduce

import numpy as np

DEFAULT_TOL = float(os.environ.get("SPORADIC_TOL", 1e-10))

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)

PAULIS = {"I": I2, "X": X, "Y": Y, "Z": Z}


class InvalidStateError(ValueError):
    """Raised when a matrix fails a density-operator invariant."""


def get_tol(tol: float | None = None) -> float:
    return DEFAULT_TOL if tol is None else float(tol)


def set_default_tol(tol: float) -> None:
    """Override the package-wide tolerance (used by the CLI ``--tol`` flag)."""
    global DEFAULT_TOL
    if not 0 < tol <= 1e-4:
        raise ValueError(f"tolerance must lie in (0, 1e-4], got {tol}")
    DEFAULT_TOL = float(tol)


def tensor(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product of any number of operators or kets, left to right."""
    if not ops:
        raise ValueError("tensor() needs at least one factor")
    return reduce(np.kron, (np.asarray(op, dtype=complex) for op in ops))


def pauli_string(label: str) -> np.ndarray:
    """Operator for a Pauli label such as ``"XYY"``."""
    return tensor(*(PAULIS[ch] for ch in label.upper()))


def trace(a: np.ndarray) -> complex:
    return complex(np.trace(a))


def dagger(a: np.ndarray) -> np.ndarray:
    return np.asarray(a).conj().T


def is_hermitian(a: np.ndarray, tol: float | None = None) -> bool:
    a = np.asarray(a)
    return a.ndim == 2 and a.shape[0] == a.shape[1] and np.allclose(a, dagger(a), rtol=0, atol=get_tol(tol))


def normalize(ket: np.ndarray) -> np.ndarray:
    ket = np.asarray(ket, dtype=complex)
    norm = np.linalg.norm(ket)
    if norm == 0:
        raise ValueError("cannot normalize the zero vector")
    return ket / norm


def projector(ket: np.ndarray, tol: float | None = None) -> np.ndarray:
    """Rank-1 projector |k><k| onto a unit ket.

    Raises:
        ValueError: if ``ket`` is not normalized within tolerance.
    """
    ket = np.asarray(ket, dtype=complex)
    if ket.ndim != 1:
        raise ValueError(f"expected a 1-D ket, got shape {ket.shape}")
    if abs(np.vdot(ket, ket).real - 1.0) > get_tol(tol):
        raise ValueError(f"ket is not normalized (squared norm {np.vdot(ket, ket).real!r})")
    return np.outer(ket, ket.conj())


def eigh(a: np.ndarray, tol: float | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix, eigenvalues ascending."""
    a = np.asarray(a, dtype=complex)
    if not is_hermitian(a, tol):
        raise ValueError("eigh requires a Hermitian matrix")
    return np.linalg.eigh((a + dagger(a)) / 2)


def min_eigenvalue(a: np.ndarray, tol: float | None = None) -> float:
    return float(eigh(a, tol)[0][0])


def is_psd(a: np.ndarray, tol: float | None = None) -> bool:
    """True iff every eigenvalue of the Hermitian matrix ``a`` is >= -tol.

    Raises:
        ValueError: if ``a`` is not Hermitian within tolerance.
    """
    return min_eigenvalue(a, tol) >= -get_tol(tol)


def check_density(rho: np.ndarray, tol: float | None = None) -> np.ndarray:
    """Validate a density operator and return it as a complex array.

    Raises:
        InvalidStateError: naming the first invariant that fails.
    """
    tol = get_tol(tol)
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidStateError(f"not a square matrix: shape {rho.shape}")
    if not is_hermitian(rho, tol):
        raise InvalidStateError("not Hermitian")
    if abs(trace(rho) - 1) > tol:
        raise InvalidStateError(f"trace is {trace(rho).real:.12g}, not 1")
    lam = min_eigenvalue(rho, tol)
    if lam < -tol:
        raise InvalidStateError(f"not positive semidefinite (min eigenvalue {lam:.3e})")
    return rho


def bloch_to_operator(bloch) -> np.ndarray:
    """(I + x X + y Y + z Z)/2. Vectors outside the unit ball give non-PSD operators."""
    x, y, z = np.asarray(bloch, dtype=float)
    return (I2 + x * X + y * Y + z * Z) / 2


def operator_to_bloch(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    return np.array([trace(rho @ P).real for P in (X, Y, Z)])


def ket_to_density(ket: np.ndarray) -> np.ndarray:
    return projector(normalize(ket))


def random_ket(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unit ket from a normalized complex Gaussian."""
    return normalize(rng.normal(size=dim) + 1j * rng.normal(size=dim))


def random_density(dim: int, rng: np.random.Generator, n_mix: int | None = None) -> np.ndarray:
    """Random mixed state: a Dirichlet-weighted mixture of Haar-random pure states.

    ``n_mix=1`` gives a pure state.
    """
    n_mix = dim if n_mix is None else n_mix
    weights = rng.dirichlet(np.ones(n_mix))
    return sum(w * ket_to_density(random_ket(dim, rng)) for w in weights)


def random_povm(dim: int, n_outcomes: int, rng: np.random.Generator) -> list[np.ndarray]:
    """Random POVM: positive operators A_j rescaled as S^{-1/2} A_j S^{-1/2} with S = sum A_j."""
    raw = []
    for _ in range(n_outcomes):
        g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        raw.append(g @ dagger(g))
    vals, vecs = np.linalg.eigh(sum(raw))
    s_inv_half = vecs @ np.diag(vals**-0.5) @ dagger(vecs)
    return [s_inv_half @ a @ s_inv_half for a in raw]


def check_povm(effects, tol: float | None = None) -> list[np.ndarray]:
    """Validate a list of PSD operators summing to the identity."""
    tol = get_tol(tol)
    effects = [np.asarray(e, dtype=complex) for e in effects]
    if not effects:
        raise ValueError("a POVM needs at least one effect")
    dim = effects[0].shape[0]
    for j, e in enumerate(effects):
        if e.shape != (dim, dim):
            raise ValueError(f"effect {j} has shape {e.shape}, expected {(dim, dim)}")
        if not is_psd(e, tol):
            raise ValueError(f"effect {j} is not positive semidefinite")
    if not np.allclose(sum(effects), np.eye(dim), rtol=0, atol=tol):
        raise ValueError("effects do not sum to the identity")
    return effects
