"""Instruction-set hidden variables for a qubit measured with twinned tetrahedral SICs.

An instruction set is a string of four signs, one per detector setting, giving
the outcome of the binary test {Pi_i^+, Pi_i^-}. Noncontextual value
assignments w send each SIC projector to 0 or 1, and w(Pi_i / 2) = w(Pi_i) / 2
together with the POVM sum rule forces exactly two of them to be 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import qmath
from .constructions import QUBIT_PLUS_BLOCH, SicSet, build_qubit_sic
from .qmath import get_tol
from .representation import probs_to_state, state_to_probs

CUBE_SLACK = 1e-9
CUBE_HALF_WIDTH = float(np.max(np.abs(QUBIT_PLUS_BLOCH)))


def spekkens_total(instruction_set: str) -> Fraction:
    """w(I) implied by the sum and coin-flip rules: sum_i w(Pi_i / 2) = (1/2) sum_i w(Pi_i)."""
    return Fraction(sum(ch == "+" for ch in instruction_set), 2)


def enumerate_instruction_sets() -> list[str]:
    """The sign patterns whose implied w(I) is 1, out of all 16."""
    candidates = ("".join(signs) for signs in itertools.product("+-", repeat=4))
    return [s for s in candidates if spekkens_total(s) == 1]


def flip(instruction_set: str) -> str:
    return instruction_set.translate(str.maketrans("+-", "-+"))


def hv_matrix(instruction_sets: list[str] | None = None) -> np.ndarray:
    """A[i, k] = 1/2 if instruction set k has + in slot i; p = A @ varrho."""
    sets = enumerate_instruction_sets() if instruction_sets is None else instruction_sets
    return np.array([[0.5 if s[i] == "+" else 0.0 for s in sets] for i in range(4)])


def probs_from_hv(varrho, tol: float | None = None) -> np.ndarray:
    """SIC probabilities p_i = (1/2) sum_lambda varrho(lambda) [lambda_i = +]."""
    varrho = np.asarray(varrho, dtype=float)
    if varrho.shape != (6,):
        raise ValueError(f"expected six weights, got shape {varrho.shape}")
    if abs(varrho.sum() - 1) > get_tol(tol):
        raise ValueError(f"weights sum to {varrho.sum():.12g}, not 1")
    return hv_matrix() @ varrho


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of solving p(varrho) = p(rho).

    ``witness``/``margin`` come from the relabeling-covariant solution, which
    decides membership of the classical region. ``family_margin`` is the best
    minimum entry over the whole two-parameter solution family, reported for
    comparison.
    """

    feasible: bool
    witness: np.ndarray | None
    margin: float
    solution: np.ndarray
    family_margin: float
    family_witness: np.ndarray

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "witness": None if self.witness is None else self.witness.tolist(),
            "margin": self.margin,
            "family_margin": self.family_margin,
            "family_witness": self.family_witness.tolist(),
        }


def _kernel(a: np.ndarray) -> np.ndarray:
    _, s, vh = np.linalg.svd(a)
    rank = int(np.sum(s > 1e-12))
    return vh[rank:].T


def _family_maximin(base: np.ndarray, kernel: np.ndarray) -> tuple[float, np.ndarray]:
    """max over z of min_k (base + kernel @ z)_k for a 2-D kernel.

    The superlevel sets are bounded polygons, so the optimum sits where three
    of the six affine functions meet; try every triple.
    """
    best_t, best = -np.inf, base
    for triple in itertools.combinations(range(len(base)), 3):
        idx = list(triple)
        m = np.column_stack([kernel[idx], -np.ones(3)])
        if abs(np.linalg.det(m)) < 1e-12:
            continue
        z = np.linalg.solve(m, -base[idx])[:2]
        cand = base + kernel @ z
        if cand.min() > best_t:
            best_t, best = float(cand.min()), cand
    return best_t, best


def covariant_solution(p: np.ndarray) -> np.ndarray:
    """Minimum-norm solution of A varrho = p.

    It is the only solution that transforms covariantly when SIC outcomes are
    relabelled: the kernel of A carries the two-dimensional irrep of S_4,
    which does not occur in the space of probability vectors. In closed form
    varrho(lambda) = p_i + p_j - 1/3, with i, j the + slots of lambda.
    """
    return np.linalg.pinv(hv_matrix()) @ np.asarray(p, dtype=float)


def hv_from_state(rho: np.ndarray, sic_plus: SicSet | None = None, tol: float | None = None) -> FeasibilityResult:
    """Hidden-variable distribution over the six instruction sets for a qubit state."""
    tol = get_tol(tol)
    sic_plus = build_qubit_sic("plus") if sic_plus is None else sic_plus
    if sic_plus.dim != 2:
        raise ValueError("hv_from_state works with a qubit SIC")
    p = state_to_probs(rho, sic_plus, tol)
    solution = covariant_solution(p)
    margin = float(solution.min())
    feasible = margin >= -tol
    family_margin, family_witness = _family_maximin(solution, _kernel(hv_matrix()))
    return FeasibilityResult(feasible, solution if feasible else None, margin, solution, family_margin, family_witness)


def in_classical_cube(bloch, slack: float = CUBE_SLACK) -> bool:
    """Bloch vector inside the cube whose vertices are the eight twinned-tetrahedra points."""
    return bool(np.max(np.abs(np.asarray(bloch, dtype=float))) <= CUBE_HALF_WIDTH + slack)


def classical_region_contains(rho: np.ndarray, sic_plus: SicSet | None = None, tol: float | None = None) -> bool:
    return hv_from_state(rho, sic_plus, tol).feasible


def dispersion_free_probs(instruction_set: str) -> np.ndarray:
    return np.array([0.5 if ch == "+" else 0.0 for ch in instruction_set])


def dispersion_free_operator(instruction_set: str, sic_plus: SicSet | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Operator and Bloch vector a single instruction set maps to; never a valid state."""
    if instruction_set not in enumerate_instruction_sets():
        raise ValueError(f"{instruction_set!r} is not an admissible instruction set")
    sic_plus = build_qubit_sic("plus") if sic_plus is None else sic_plus
    op, _ = probs_to_state(dispersion_free_probs(instruction_set), sic_plus)
    return op, qmath.operator_to_bloch(op)


def singlet_state() -> np.ndarray:
    """(|01> - |10>)/sqrt(2): rotation invariant and perfectly anticorrelated along every axis."""
    return qmath.projector(np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2))


def right_state_after(rho: np.ndarray, left_effect: np.ndarray) -> np.ndarray:
    """Conditional state of the right qubit after the left detector fires ``left_effect``."""
    m = qmath.tensor(left_effect, qmath.I2)
    post = (m @ rho @ m).reshape(2, 2, 2, 2)
    reduced = np.einsum("abac->bc", post)
    return reduced / qmath.trace(reduced)


def anticoincidence(left: int, right: int, sic_plus: SicSet | None = None, sic_minus: SicSet | None = None) -> tuple[float, float]:
    """Anti-coincidence probability for detector settings (left, right): quantum and uniform-HV.

    Quantum: the singlet ascription, adding P(+ left, - right) and P(- left, + right).
    HV: instruction set lambda on the left, -lambda on the right, all six equally likely.
    """
    if left not in range(4) or right not in range(4):
        raise ValueError("detector settings run from 0 to 3")
    plus = (build_qubit_sic("plus") if sic_plus is None else sic_plus).projectors
    minus = (build_qubit_sic("minus") if sic_minus is None else sic_minus).projectors
    rho = singlet_state()
    quantum = sum(
        qmath.trace(rho @ qmath.tensor(a[left], b[right])).real for a, b in ((plus, minus), (minus, plus))
    )
    sets = enumerate_instruction_sets()
    hits = sum(lam[left] != flip(lam)[right] for lam in sets)
    return float(quantum), float(Fraction(hits, len(sets)))


def anticoincidence_table() -> tuple[np.ndarray, np.ndarray]:
    plus, minus = build_qubit_sic("plus"), build_qubit_sic("minus")
    quantum, hv = np.zeros((4, 4)), np.zeros((4, 4))
    for i, j in itertools.product(range(4), repeat=2):
        quantum[i, j], hv[i, j] = anticoincidence(i, j, plus, minus)
    return quantum, hv


def anticoincidence_csv() -> str:
    quantum, hv = anticoincidence_table()
    lines = ["left,right,quantum,hidden_variable"]
    for i, j in itertools.product(range(4), repeat=2):
        lines.append(f"{i},{j},{quantum[i, j]:.15g},{hv[i, j]:.15g}")
    return "\n".join(lines) + "\n"
