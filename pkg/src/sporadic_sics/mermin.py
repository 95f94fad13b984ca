"""Mermin's three-qubit Bell inequality, the GHZ state and its Hoggar-SIC representation."""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from . import qmath
from .constructions import SicSet, pauli_elements
from .representation import ket_to_probs, sic_state_expectations, state_to_probs

MERMIN_TERMS = (("XXX", 1), ("XYY", -1), ("YXY", -1), ("YYX", -1))
LHV_INTERVAL = (-2, 2)
LAMBDA_NAMES = ("1X", "1Y", "2X", "2Y", "3X", "3Y")
GHZ_OVERLAP = Fraction(5, 288)


def mermin_operators() -> list[np.ndarray]:
    """The signed operators XXX, -XYY, -YXY, -YYX."""
    return [sign * qmath.pauli_string(label) for label, sign in MERMIN_TERMS]


def bell_operator() -> np.ndarray:
    return sum(mermin_operators())


def ghz_ket() -> np.ndarray:
    ket = np.zeros(8, dtype=complex)
    ket[0] = ket[7] = 1 / np.sqrt(2)
    return ket


def ghz_state() -> np.ndarray:
    """(|000> + |111>)/sqrt(2) as a density operator."""
    return qmath.projector(ghz_ket())


def bell_value(rho: np.ndarray, tol: float | None = None) -> float:
    """B(rho) = <XXX> - <XYY> - <YXY> - <YYX>."""
    rho = qmath.check_density(rho, tol)
    if rho.shape != (8, 8):
        raise ValueError(f"Mermin's inequality needs a three-qubit state, got dimension {rho.shape[0]}")
    return qmath.trace(bell_operator() @ rho).real


def lhv_value(lam: tuple[int, ...]) -> int:
    """Mermin combination for a dispersion-free assignment (l1X, l1Y, l2X, l2Y, l3X, l3Y)."""
    if len(lam) != 6 or any(v not in (1, -1) for v in lam):
        raise ValueError(f"expected six +/-1 signs, got {lam}")
    x1, y1, x2, y2, x3, y3 = lam
    return x1 * x2 * x3 - x1 * y2 * y3 - y1 * x2 * y3 - y1 * y2 * x3


def enumerate_lhv() -> list[tuple[tuple[int, ...], int]]:
    """All 64 sign assignments with their integer Mermin value."""
    return [(lam, lhv_value(lam)) for lam in itertools.product((1, -1), repeat=6)]


@dataclass(frozen=True)
class ExpectationTable:
    """tr(O Pi_i) for the four signed Mermin operators (columns) over the 64 Hoggar states (rows)."""

    values: np.ndarray
    row_labels: tuple[str, ...]
    columns: tuple[str, ...] = ("XXX", "-XYY", "-YXY", "-YYX")

    @property
    def row_combinations(self) -> np.ndarray:
        return self.values.sum(axis=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["pauli_element", "label", *self.columns, "combination"])
        for element, label, row, comb in zip(pauli_elements(), self.row_labels, self.values, self.row_combinations):
            writer.writerow(["".join(map(str, element)), label, *(f"{v:.15g}" for v in row), f"{comb:.15g}"])
        return buf.getvalue()


def expectation_table(hoggar: SicSet) -> ExpectationTable:
    values = np.column_stack([sic_state_expectations(op, hoggar) for op in mermin_operators()])
    return ExpectationTable(values, hoggar.element_labels)


@dataclass(frozen=True)
class GhzReport:
    per_operator_sums: list[float]
    undeformed_total: float
    deformed_total: float
    lhv_interval: tuple[int, int]
    undeformed_classical: bool
    deformed_classical: bool

    @property
    def verdict(self) -> str:
        if self.undeformed_classical and not self.deformed_classical:
            return "violation appears only after the (d+1) deformation"
        return "no violation" if self.deformed_classical else "violation"

    def to_dict(self) -> dict:
        out = asdict(self)
        out["lhv_interval"] = list(self.lhv_interval)
        out["verdict"] = self.verdict
        return out


def _in_lhv(x: float, tol: float) -> bool:
    return LHV_INTERVAL[0] - tol <= x <= LHV_INTERVAL[1] + tol


def ghz_sic_analysis(hoggar: SicSet, tol: float | None = None) -> GhzReport:
    """Weighted sums sum_i p_GHZ(H_i) <O>_i, before and after the d+1 rescaling."""
    tol = qmath.get_tol(tol)
    p = state_to_probs(ghz_state(), hoggar, tol)
    sums = [float(p @ col) for col in expectation_table(hoggar).values.T]
    undeformed = float(sum(sums))
    deformed = (hoggar.dim + 1) * undeformed
    return GhzReport(sums, undeformed, deformed, LHV_INTERVAL, _in_lhv(undeformed, tol), _in_lhv(deformed, tol))


# Odd number of + outcomes; all four are +1 eigenstates of XXX.
ODD_PARITY_STATES = ("+++", "+--", "-+-", "--+")


def x_basis_ket(signs: str) -> np.ndarray:
    """Product of X eigenstates, e.g. '+-+' -> |+>|->|+>."""
    plus = np.array([1, 1], dtype=complex) / np.sqrt(2)
    minus = np.array([1, -1], dtype=complex) / np.sqrt(2)
    return qmath.tensor(*(plus if s == "+" else minus for s in signs))


@dataclass(frozen=True)
class ParityReport:
    overlap_sums: dict[str, float]
    classical_sum: float
    p_odd: float
    p_odd_direct: float

    def to_dict(self) -> dict:
        return asdict(self)


def ghz_parity(hoggar: SicSet, tol: float | None = None) -> ParityReport:
    """Odd-parity probability for GHZ from SIC overlaps.

    P(odd) = d(d+1) sum_i p_GHZ,i sum_s p_s,i - sum_i sum_s p_s,i, summing s over
    the four odd-parity X-basis states.
    """
    d = hoggar.dim
    p_ghz = state_to_probs(ghz_state(), hoggar, tol)
    probs = {s: ket_to_probs(x_basis_ket(s), hoggar) for s in ODD_PARITY_STATES}
    overlaps = {s: float(p_ghz @ q) for s, q in probs.items()}
    total = sum(probs.values())
    p_odd = d * (d + 1) * float(p_ghz @ total) - float(total.sum())
    rho = ghz_state()
    direct = sum(qmath.trace(rho @ qmath.projector(x_basis_ket(s))).real for s in ODD_PARITY_STATES)
    return ParityReport(overlaps, float(sum(overlaps.values())), p_odd, direct)

