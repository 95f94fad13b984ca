"""Battery of checks comparing computed quantities with their expected values."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import hidden_variables as hv
from . import kochen_specker as ks
from . import mermin, qmath
from .constructions import build_hesse_sic, build_hoggar_sic, build_qubit_sic, build_qutrit_mubs, verify_sic
from .representation import born_probabilities, conditional_matrix, gauge_apply, probs_to_state, state_to_probs, urgleichung

EXPECTED_INSTRUCTION_SETS = {"++--", "--++", "-++-", "+--+", "+-+-", "-+-+"}


@dataclass(frozen=True)
class Check:
    quantity: str
    expected: str
    expected_value: float
    computed: float
    tol: float

    @property
    def delta(self) -> float:
        return abs(self.computed - self.expected_value)

    @property
    def passed(self) -> bool:
        return self.delta <= self.tol

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "expected": self.expected,
            "computed": self.computed,
            "delta": self.delta,
            "tol": self.tol,
            "passed": self.passed,
        }


def _check(quantity: str, expected, computed, tol: float) -> Check:
    return Check(quantity, str(expected), float(expected), float(computed), tol)


def _worst(values, target: float) -> float:
    """The entry of ``values`` farthest from ``target``."""
    values = np.asarray(values, dtype=float).ravel()
    return float(values[np.argmax(np.abs(values - target))])


def run_checks(tol: float | None = None, seed: int = 0) -> list[Check]:
    tol = qmath.get_tol(tol)
    rng = np.random.default_rng(seed)
    rows: list[Check] = []

    sics = {
        "qubit-plus": build_qubit_sic("plus"),
        "qubit-minus": build_qubit_sic("minus"),
        "hesse": build_hesse_sic(),
        "hoggar": build_hoggar_sic(),
    }
    for label, sic in sics.items():
        d = sic.dim
        gram = sic.gram()[~np.eye(d * d, dtype=bool)]
        rows.append(_check(f"{label} off-diagonal |<pi_i|pi_j>|^2", Fraction(1, d + 1), _worst(gram, 1 / (d + 1)), tol))
        rows.append(_check(f"{label} max |sum Pi_i/d - I|", 0, verify_sic(sic).max_identity_deviation, tol))

    lhv = [v for _, v in mermin.enumerate_lhv()]
    rows.append(_check("LHV assignments enumerated", 64, len(lhv), 0))
    rows.append(_check("LHV min B", -2, min(lhv), 0))
    rows.append(_check("LHV max B", 2, max(lhv), 0))
    rows.append(_check("LHV values outside {-2, +2}", 0, sum(v not in (-2, 2) for v in lhv), 0))
    rows.append(_check("B(GHZ)", 4, mermin.bell_value(mermin.ghz_state()), tol))

    hoggar = sics["hoggar"]
    table = mermin.expectation_table(hoggar)
    rows.append(_check("Hoggar |<O>_i| (256 entries)", Fraction(1, 3), _worst(np.abs(table.values), 1 / 3), tol))
    rows.append(_check("Hoggar |row combination| (64 rows)", Fraction(2, 3), _worst(np.abs(table.row_combinations), 2 / 3), tol))

    ghz = mermin.ghz_sic_analysis(hoggar, tol)
    for (label, sign), value in zip(mermin.MERMIN_TERMS, ghz.per_operator_sums):
        name = label if sign > 0 else f"-{label}"
        rows.append(_check(f"sum_i p_GHZ(H_i) <{name}>_i", Fraction(1, 9), value, tol))
    rows.append(_check("undeformed total", Fraction(4, 9), ghz.undeformed_total, tol))
    rows.append(_check("undeformed total inside [-2, 2]", 1, ghz.undeformed_classical, 0))
    rows.append(_check("deformed total (d+1) x undeformed", 4, ghz.deformed_total, tol))

    parity = mermin.ghz_parity(hoggar, tol)
    for state, value in parity.overlap_sums.items():
        rows.append(_check(f"GHZ.({state}) overlap", mermin.GHZ_OVERLAP, value, 1e-12))
    rows.append(_check("P(odd) via urgleichung", 1, parity.p_odd, tol))

    sets = hv.enumerate_instruction_sets()
    rows.append(_check("instruction sets derived", 6, len(sets), 0))
    rows.append(_check("derived sets differ from listed six", 0, len(set(sets) ^ EXPECTED_INSTRUCTION_SETS), 0))
    quantum, hidden = hv.anticoincidence_table()
    off = ~np.eye(4, dtype=bool)
    rows.append(_check("anti-coincidence, same setting", 1, _worst(quantum[~off], 1), tol))
    rows.append(_check("anti-coincidence, different settings", Fraction(1, 3), _worst(quantum[off], 1 / 3), tol))
    rows.append(_check("max |quantum - HV| anti-coincidence", 0, np.max(np.abs(quantum - hidden)), tol))

    plus = sics["qubit-plus"]
    vertices = list(np.vstack([hv.QUBIT_PLUS_BLOCH, -hv.QUBIT_PLUS_BLOCH]))
    pauli_eigen = [s * e for e in np.eye(3) for s in (1, -1)]
    n_vertex = sum(hv.classical_region_contains(qmath.bloch_to_operator(b), plus, tol) for b in vertices)
    n_pauli = sum(not hv.classical_region_contains(qmath.bloch_to_operator(b), plus, tol) for b in pauli_eigen)
    rows.append(_check("tetrahedra vertices classical", 8, n_vertex, 0))
    rows.append(_check("Pauli eigenstates non-classical", 6, n_pauli, 0))
    rows.append(_check("solver/cube agreement (1000 random Bloch points)", 1000, classical_agreement(1000, rng, plus, tol), 0))

    octa = [hv.dispersion_free_operator(s, plus) for s in sets]
    rows.append(_check("dispersion-free operators non-PSD", 6, sum(not qmath.is_psd(op, tol) for op, _ in octa), 0))
    norms = [np.linalg.norm(b) for _, b in octa]
    rows.append(Check("dispersion-free Bloch norm", "sqrt(3)", np.sqrt(3), _worst(norms, np.sqrt(3)), tol))

    graph = ks.build_graph(sics["hesse"], build_qutrit_mubs(sics["hesse"]))
    sic_deg, mub_deg = graph.degrees()
    rows.append(_check("KS SIC-vertex degree", 4, _only(sic_deg), 0))
    rows.append(_check("KS MUB-vertex degree", 3, _only(mub_deg), 0))
    report = ks.ks_report(sics["hesse"], seed=seed)
    rows.append(_check("KS assignments", 81, len(report.per_assignment), 0))
    rows.append(_check("KS max sum w(Pi_i)", 2, report.max_achievable, 0))
    rows.append(_check("KS required sum w(Pi_i)", 3, report.required_sum, 0))
    rows.append(_check("KS Born sum tr(rho Pi_i), 20 random states", 3, _worst(report.born_sums, 3), tol))

    rows.extend(property_checks(rng, tol))
    return rows


def _only(values: set) -> float:
    return next(iter(values)) if len(values) == 1 else float("nan")


def classical_agreement(n: int, rng: np.random.Generator, sic_plus=None, tol: float | None = None) -> int:
    """Count random Bloch-ball points where the solver and the cube test agree.

    Points within 1e-6 of a cube face count as agreeing either way.
    """
    agree = 0
    for _ in range(n):
        direction = rng.normal(size=3)
        bloch = direction / np.linalg.norm(direction) * rng.uniform() ** (1 / 3)
        near_face = abs(np.max(np.abs(bloch)) - hv.CUBE_HALF_WIDTH) < 1e-6
        solver = hv.classical_region_contains(qmath.bloch_to_operator(bloch), sic_plus, tol)
        agree += near_face or solver == hv.in_classical_cube(bloch)
    return agree


def property_checks(rng: np.random.Generator, tol: float) -> list[Check]:
    """Worst-case deviations for the round trip, urgleichung and gauge placements."""
    rows = []
    sics = {2: build_qubit_sic("plus"), 3: build_hesse_sic(), 8: build_hoggar_sic()}
    for d, sic in sics.items():
        worst = 0.0
        for _ in range(100):
            rho = qmath.random_density(d, rng)
            back, _ = probs_to_state(state_to_probs(rho, sic), sic)
            worst = max(worst, float(np.max(np.abs(back - rho))))
        rows.append(_check(f"round trip state->probs->state, d={d}", 0, worst, tol))
    urg, gauge = 0.0, 0.0
    for k in range(50):
        d = (2, 3, 8)[k % 3]
        sic = sics[d]
        rho = qmath.random_density(d, rng)
        povm = qmath.random_povm(d, int(rng.integers(2, 6)), rng)
        p, cond = state_to_probs(rho, sic), conditional_matrix(povm, sic)
        q = urgleichung(p, cond)
        urg = max(urg, float(np.max(np.abs(q - born_probabilities(rho, povm)))))
        outs = [gauge_apply(cond, p, placement) for placement in ("right", "left", "split")]
        gauge = max(gauge, *(float(np.max(np.abs(a - b))) for a in outs for b in outs))
    rows.append(_check("urgleichung vs Born rule, 50 pairs", 0, urg, tol))
    rows.append(_check("gauge placements pairwise, 50 pairs", 0, gauge, tol))
    return rows


def to_csv(rows: list[Check]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["quantity", "expected", "computed", "delta", "tol", "passed"])
    for r in rows:
        writer.writerow([r.quantity, r.expected, f"{r.computed:.15g}", f"{r.delta:.3e}", f"{r.tol:g}", r.passed])
    return buf.getvalue()


def to_markdown(rows: list[Check]) -> str:
    lines = ["| quantity | expected | computed | abs diff | pass |", "|---|---|---|---|---|"]
    for r in rows:
        name = r.quantity.replace("|", "\\|")
        lines.append(f"| {name} | {r.expected} | {r.computed:.12g} | {r.delta:.1e} | {'yes' if r.passed else 'NO'} |")
    return "\n".join(lines) + "\n"
