import csv
import io
import itertools

import numpy as np
import pytest
from numpy.testing import assert_allclose

from sporadic_sics import mermin, qmath
from sporadic_sics.constructions import three_qubit_pauli_group
from sporadic_sics.representation import sic_expectation, state_to_probs


def test_mermin_operators_structure():
    for op in mermin.mermin_operators():
        assert qmath.is_hermitian(op)
        assert abs(qmath.trace(op)) < 1e-14
        assert_allclose(op @ op, np.eye(8), atol=1e-14)


def test_ghz_eigen_relations():
    rho = mermin.ghz_state()
    for label, sign in mermin.MERMIN_TERMS:
        assert_allclose(qmath.pauli_string(label) @ rho, sign * rho, atol=1e-14)
    assert qmath.trace(rho @ qmath.pauli_string("XXX")).real == pytest.approx(1)
    assert qmath.trace(rho @ qmath.pauli_string("XYY")).real == pytest.approx(-1)
    assert qmath.trace(rho @ rho).real == pytest.approx(1)


def test_bell_values():
    assert mermin.bell_value(mermin.ghz_state()) == pytest.approx(4, abs=1e-10)
    assert mermin.bell_value(np.eye(8) / 8) == pytest.approx(0, abs=1e-14)


def test_bell_value_wrong_dimension():
    with pytest.raises(ValueError, match="three-qubit"):
        mermin.bell_value(np.eye(4) / 4)


def test_lhv_enumeration():
    results = mermin.enumerate_lhv()
    assert len(results) == 64
    assert len({lam for lam, _ in results}) == 64
    values = [v for _, v in results]
    assert set(values) == {-2, 2}
    assert all(isinstance(v, int) for v in values)
    assert mermin.lhv_value((1,) * 6) == -2


def test_lhv_odd_under_global_flip():
    for lam, value in mermin.enumerate_lhv():
        assert mermin.lhv_value(tuple(-v for v in lam)) == -value


def test_lhv_value_validates():
    with pytest.raises(ValueError):
        mermin.lhv_value((1, 1, 1))


def test_expectation_table(hoggar):
    table = mermin.expectation_table(hoggar)
    assert table.values.shape == (64, 4)
    assert np.max(np.abs(np.abs(table.values) - 1 / 3)) < 1e-10
    assert np.max(np.abs(np.abs(table.row_combinations) - 2 / 3)) < 1e-10


def test_bell_value_of_hoggar_states(hoggar):
    for proj in hoggar.projectors:
        assert abs(mermin.bell_value(proj)) == pytest.approx(2 / 3, abs=1e-10)


def test_all_non_identity_paulis_give_one_third(hoggar):
    for g in three_qubit_pauli_group()[1:]:
        vals = np.einsum("ia,ab,ib->i", hoggar.kets.conj(), g, hoggar.kets)
        assert np.max(np.abs(np.abs(vals) - 1 / 3)) < 1e-10


def test_convex_mixtures_stay_classical(hoggar, rng):
    combos = mermin.expectation_table(hoggar).row_combinations
    for _ in range(200):
        w = rng.dirichlet(np.ones(64) * rng.uniform(0.05, 2))
        assert abs(w @ combos) <= 2 / 3 + 1e-12


def test_expectation_table_csv(hoggar):
    rows = list(csv.reader(io.StringIO(mermin.expectation_table(hoggar).to_csv())))
    assert rows[0][:2] == ["pauli_element", "label"]
    assert len(rows) == 65
    assert rows[1][0] == "000000" and rows[1][1] == "III"


def test_ghz_sic_analysis(hoggar):
    report = mermin.ghz_sic_analysis(hoggar)
    assert_allclose(report.per_operator_sums, 1 / 9, atol=1e-10)
    assert report.undeformed_total == pytest.approx(4 / 9, abs=1e-10)
    assert report.deformed_total == pytest.approx(4, abs=1e-10)
    assert report.undeformed_classical and not report.deformed_classical
    data = report.to_dict()
    assert {"per_operator_sums", "undeformed_total", "deformed_total", "lhv_interval", "verdict"} <= set(data)


def test_bell_value_via_sic_expectations(hoggar, rng):
    for _ in range(10):
        rho = qmath.random_density(8, rng)
        p = state_to_probs(rho, hoggar)
        via_sic = sum(sic_expectation(op, p, hoggar) for op in mermin.mermin_operators())
        assert via_sic == pytest.approx(mermin.bell_value(rho), abs=1e-10)


def test_ghz_parity(hoggar):
    report = mermin.ghz_parity(hoggar)
    assert set(report.overlap_sums) == set(mermin.ODD_PARITY_STATES)
    for value in report.overlap_sums.values():
        assert value == pytest.approx(5 / 288, abs=1e-12)
    assert report.p_odd == pytest.approx(1, abs=1e-10)
    assert report.p_odd_direct == pytest.approx(1, abs=1e-12)
    # the naive classical sum of the four overlaps
    assert report.classical_sum == pytest.approx(4 * 5 / 288)


def test_x_basis_parity_states():
    for signs in itertools.product("+-", repeat=3):
        label = "".join(signs)
        ket = mermin.x_basis_ket(label)
        expected = (-1) ** label.count("-")
        assert_allclose(qmath.pauli_string("XXX") @ ket, expected * ket, atol=1e-14)
    assert all(s.count("-") % 2 == 0 for s in mermin.ODD_PARITY_STATES)


def test_parity_overlap_oracle():
    # SIC 2-design identity: sum_i tr(rho Pi_i) tr(sigma Pi_i) = d/(d+1) (1 + tr(rho sigma))
    d = 8
    fidelity = abs(np.vdot(mermin.x_basis_ket("+++"), mermin.ghz_ket())) ** 2
    assert fidelity == pytest.approx(1 / 4)
    oracle = d / (d + 1) * (1 + fidelity) / d**2
    assert oracle == pytest.approx(float(mermin.GHZ_OVERLAP), abs=1e-15)
