"""Quantum states as SIC probability vectors.

A state rho on C^d is represented by the outcome probabilities of the SIC
measurement {Pi_i / d}::

    p_i = tr(rho Pi_i) / d
    rho = sum_i [(d+1) p_i - 1/d] Pi_i

and the probabilities for any other POVM {D_j} follow from the urgleichung,
a deformed law of total probability::

    q_j = sum_i [(d+1) p_i - 1/d] tr(D_j Pi_i)

Probability vectors, quasi-probability vectors and conditional matrices are
plain float arrays.
"""

from __future__ import annotations

import math

import numpy as np

from . import qmath
from .constructions import SicSet
from .qmath import get_tol

PLACEMENTS = ("right", "left", "split")


def _dim_from_length(n: int) -> int:
    d = math.isqrt(n)
    if d * d != n:
        raise ValueError(f"length {n} is not a perfect square")
    return d


def _check_normalized(p: np.ndarray, tol: float | None) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.ndim != 1:
        raise ValueError(f"expected a 1-D probability vector, got shape {p.shape}")
    if abs(p.sum() - 1) > get_tol(tol):
        raise ValueError(f"probabilities sum to {p.sum():.12g}, not 1")
    return p


def state_to_probs(rho: np.ndarray, sic: SicSet, tol: float | None = None) -> np.ndarray:
    """SIC probabilities p_i = tr(rho Pi_i)/d of a density operator."""
    rho = qmath.check_density(rho, tol)
    if rho.shape != (sic.dim, sic.dim):
        raise ValueError(f"state has dimension {rho.shape[0]}, SIC has dimension {sic.dim}")
    # tr(rho |k><k|) = <k|rho|k>
    return np.einsum("ia,ab,ib->i", sic.kets.conj(), rho, sic.kets).real / sic.dim


def ket_to_probs(ket: np.ndarray, sic: SicSet) -> np.ndarray:
    """SIC probabilities of a pure state |psi>: |<pi_i|psi>|^2 / d."""
    ket = qmath.normalize(ket)
    return np.abs(sic.kets.conj() @ ket) ** 2 / sic.dim


def probs_to_state(p: np.ndarray, sic: SicSet, tol: float | None = None) -> tuple[np.ndarray, bool]:
    """Reconstruct the operator sum_i [(d+1) p_i - 1/d] Pi_i.

    Normalized inputs always give a Hermitian unit-trace operator, but it is
    only a state when the returned flag is True. Dispersion-free
    distributions land outside state space and come back flagged False.

    Raises:
        ValueError: if ``p`` is not normalized or has the wrong length.
    """
    p = _check_normalized(p, tol)
    if len(p) != len(sic):
        raise ValueError(f"expected {len(sic)} probabilities, got {len(p)}")
    op = np.einsum("i,iab->ab", quasiprob(p), sic.projectors)
    return op, qmath.is_psd(op, tol)


def quasiprob(p: np.ndarray) -> np.ndarray:
    """The deformed weights (d+1) p_i - 1/d; they still sum to one but may go negative."""
    p = np.asarray(p, dtype=float)
    d = _dim_from_length(len(p))
    return (d + 1) * p - 1 / d


def negativity(q: np.ndarray) -> float:
    """Total negative mass sum_i max(0, -q_i)."""
    q = np.asarray(q, dtype=float)
    return float(np.sum(np.clip(-q, 0, None)))


def conditional_matrix(povm, sic: SicSet, tol: float | None = None) -> np.ndarray:
    """r[j, i] = tr(D_j Pi_i) for a validated POVM {D_j}."""
    effects = qmath.check_povm(povm, tol)
    if effects[0].shape[0] != sic.dim:
        raise ValueError("POVM and SIC dimensions differ")
    return np.einsum("ia,jab,ib->ji", sic.kets.conj(), np.array(effects), sic.kets).real


def conditional_to_dict(cond: np.ndarray, row_labels=None, col_labels=None) -> dict:
    cond = np.asarray(cond, dtype=float)
    rows = list(row_labels) if row_labels is not None else [f"D{j}" for j in range(cond.shape[0])]
    cols = list(col_labels) if col_labels is not None else [f"H{i + 1}" for i in range(cond.shape[1])]
    return {"rows": rows, "columns": cols, "entries": cond.tolist()}


def born_probabilities(rho: np.ndarray, povm) -> np.ndarray:
    return np.array([qmath.trace(rho @ e).real for e in povm])


def urgleichung(p: np.ndarray, cond: np.ndarray) -> np.ndarray:
    """Outcome probabilities of another measurement from SIC probabilities and tr(D_j Pi_i)."""
    p = np.asarray(p, dtype=float)
    cond = np.asarray(cond, dtype=float)
    if cond.ndim != 2 or cond.shape[1] != len(p):
        raise ValueError(f"conditional matrix shape {cond.shape} does not match {len(p)} probabilities")
    return cond @ quasiprob(p)


def gauge_matrix(d: int) -> np.ndarray:
    """Phi = (d+1) I - J/d on R^(d^2), with J the all-ones matrix, so that Phi p = quasiprob(p)."""
    n = d * d
    return (d + 1) * np.eye(n) - np.ones((n, n)) / d


def gauge_sqrt(d: int) -> np.ndarray:
    """Symmetric square root of Phi. Its spectrum is d+1 (on sum-zero vectors) and 1 (on the all-ones vector)."""
    vals, vecs = np.linalg.eigh(gauge_matrix(d))
    return vecs @ np.diag(np.sqrt(vals)) @ vecs.T


def gauge_apply(cond: np.ndarray, p: np.ndarray, placement: str = "right") -> np.ndarray:
    """Evaluate cond . Phi . p with the negativity pushed to the right, the left, or split.

    ``right`` turns p into quasi-probabilities, ``left`` turns the conditional
    matrix into a quasi-stochastic one, ``split`` applies Phi^{1/2} to both.
    All three agree.
    """
    p = np.asarray(p, dtype=float)
    cond = np.asarray(cond, dtype=float)
    d = _dim_from_length(len(p))
    if placement == "right":
        return cond @ (gauge_matrix(d) @ p)
    if placement == "left":
        return (cond @ gauge_matrix(d)) @ p
    if placement == "split":
        half = gauge_sqrt(d)
        return (cond @ half) @ (half @ p)
    raise ValueError(f"placement must be one of {PLACEMENTS}, got {placement!r}")


def sic_state_expectations(a: np.ndarray, sic: SicSet, tol: float | None = None) -> np.ndarray:
    """<A>_i = tr(A Pi_i) for every SIC element; real for Hermitian A."""
    a = np.asarray(a, dtype=complex)
    if not qmath.is_hermitian(a, tol):
        raise ValueError("observable must be Hermitian")
    return np.einsum("ia,ab,ib->i", sic.kets.conj(), a, sic.kets).real


def sic_expectation(a: np.ndarray, p: np.ndarray, sic: SicSet, tol: float | None = None) -> float:
    """<A> = (d+1) sum_i p_i <A>_i - (1/d) sum_i <A>_i."""
    p = np.asarray(p, dtype=float)
    d = sic.dim
    local = sic_state_expectations(a, sic, tol)
    return float((d + 1) * p @ local - local.sum() / d)


def undeformed_expectation(a: np.ndarray, p: np.ndarray, sic: SicSet, tol: float | None = None) -> float:
    """Naive classical average sum_i p_i <A>_i; off by the factor d+1 for traceless A."""
    return float(np.asarray(p, dtype=float) @ sic_state_expectations(a, sic, tol))
