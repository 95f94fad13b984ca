import itertools

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.optimize import linprog

from sporadic_sics import hidden_variables as hv
from sporadic_sics import qmath
from sporadic_sics.constructions import QUBIT_PLUS_BLOCH
from sporadic_sics.representation import state_to_probs

LISTED = {"++--", "--++", "-++-", "+--+", "+-+-", "-+-+"}


def test_instruction_sets_derived():
    sets = hv.enumerate_instruction_sets()
    assert len(sets) == 6
    assert set(sets) == LISTED
    assert "++++" not in sets
    assert all(hv.flip(s) in sets for s in sets)


def test_spekkens_total_rejects_others():
    others = {"".join(s) for s in itertools.product("+-", repeat=4)} - LISTED
    assert all(hv.spekkens_total(s) != 1 for s in others)


def test_probs_from_hv_examples():
    assert_allclose(hv.probs_from_hv(np.ones(6) / 6), 0.25)
    sets = hv.enumerate_instruction_sets()
    point = np.eye(6)[sets.index("++--")]
    assert_allclose(hv.probs_from_hv(point), [0.5, 0.5, 0, 0])


def test_conditioning_on_plus_in_slot_zero():
    sets = hv.enumerate_instruction_sets()
    varrho = np.array([1 / 3 if s in ("++--", "+--+", "+-+-") else 0 for s in sets])
    assert_allclose(hv.probs_from_hv(varrho), [1 / 2, 1 / 6, 1 / 6, 1 / 6])


def test_probs_from_hv_rejects_unnormalized():
    with pytest.raises(ValueError):
        hv.probs_from_hv(np.ones(6))


def test_probs_from_hv_sums_to_one(rng):
    for _ in range(20):
        assert hv.probs_from_hv(rng.dirichlet(np.ones(6))).sum() == pytest.approx(1)


def test_covariant_solution_closed_form(rng):
    sets = hv.enumerate_instruction_sets()
    for _ in range(20):
        p = rng.dirichlet(np.ones(4))
        expected = [sum(p[i] for i in range(4) if s[i] == "+") - 1 / 3 for s in sets]
        sol = hv.covariant_solution(p)
        assert_allclose(sol, expected, atol=1e-12)
        assert_allclose(hv.hv_matrix() @ sol, p, atol=1e-12)


def test_covariant_solution_is_relabeling_covariant(rng):
    sets = hv.enumerate_instruction_sets()
    p = rng.dirichlet(np.ones(4))
    sol = dict(zip(sets, hv.covariant_solution(p)))
    for perm in itertools.permutations(range(4)):
        permuted = hv.covariant_solution(p[list(perm)])
        for s, value in zip(sets, permuted):
            original = "".join(s[perm.index(k)] for k in range(4))
            assert value == pytest.approx(sol[original], abs=1e-12)


def test_maximally_mixed_is_classical(qubit_plus):
    result = hv.hv_from_state(np.eye(2) / 2, qubit_plus)
    assert result.feasible
    assert_allclose(result.witness, 1 / 6, atol=1e-12)


@pytest.mark.parametrize("sign", [1, -1])
def test_tetrahedra_vertices_classical(qubit_plus, sign):
    for b in sign * QUBIT_PLUS_BLOCH:
        assert hv.classical_region_contains(qmath.bloch_to_operator(b), qubit_plus)


def test_pauli_eigenstates_not_classical(qubit_plus):
    for axis in np.eye(3):
        for sign in (1, -1):
            result = hv.hv_from_state(qmath.bloch_to_operator(sign * axis), qubit_plus)
            assert not result.feasible
            assert result.witness is None
            # oracle: 1/6 - 1/(2 sqrt 3) from the closed form
            assert result.margin == pytest.approx(1 / 6 - 1 / (2 * np.sqrt(3)), abs=1e-12)


def test_classical_region_examples():
    assert hv.classical_region_contains(qmath.bloch_to_operator(np.ones(3) / np.sqrt(3)))
    assert not hv.classical_region_contains(qmath.bloch_to_operator([0, 0, 1]))
    assert hv.classical_region_contains(qmath.bloch_to_operator([0, 0, 0]))


def _lp_maximin(p):
    """Independent oracle: max t s.t. A varrho = p, varrho_k >= t."""
    a = hv.hv_matrix()
    c = np.zeros(7)
    c[-1] = -1
    a_ub = np.hstack([-np.eye(6), np.ones((6, 1))])
    a_eq = np.hstack([a, np.zeros((4, 1))])
    res = linprog(c, A_ub=a_ub, b_ub=np.zeros(6), A_eq=a_eq, b_eq=p, bounds=[(None, None)] * 7)
    assert res.success
    return -res.fun


def test_family_maximin_matches_lp(qubit_plus, rng):
    for _ in range(30):
        v = rng.normal(size=3)
        b = v / np.linalg.norm(v) * rng.uniform() ** (1 / 3)
        rho = qmath.bloch_to_operator(b)
        result = hv.hv_from_state(rho, qubit_plus)
        oracle = _lp_maximin(state_to_probs(rho, qubit_plus))
        assert result.family_margin == pytest.approx(oracle, abs=1e-9)
        assert_allclose(hv.hv_matrix() @ result.family_witness, state_to_probs(rho, qubit_plus), atol=1e-12)


def test_family_admits_every_quantum_state(qubit_plus):
    # Without the covariance requirement even Pauli eigenstates have a nonnegative solution.
    result = hv.hv_from_state(qmath.bloch_to_operator([0, 0, 1]), qubit_plus)
    assert result.family_margin >= 0


def test_solver_agrees_with_cube(qubit_plus, rng):
    for _ in range(1000):
        v = rng.normal(size=3)
        b = v / np.linalg.norm(v) * rng.uniform() ** (1 / 3)
        if abs(np.max(np.abs(b)) - hv.CUBE_HALF_WIDTH) < 1e-6:
            continue
        assert hv.classical_region_contains(qmath.bloch_to_operator(b), qubit_plus) == hv.in_classical_cube(b)


def test_cube_vertices_are_images_of_mixtures():
    # each cube vertex n_k has p = (1 + n_k . n_i)/4 and a nonnegative covariant solution
    for b in np.vstack([QUBIT_PLUS_BLOCH, -QUBIT_PLUS_BLOCH]):
        p = (1 + QUBIT_PLUS_BLOCH @ b) / 4
        sol = hv.covariant_solution(p)
        assert sol.min() >= -1e-12
        assert_allclose(sol.sum(), 1)


def test_dispersion_free_octahedron(qubit_plus):
    blochs = []
    for s in hv.enumerate_instruction_sets():
        op, b = hv.dispersion_free_operator(s, qubit_plus)
        assert qmath.is_hermitian(op)
        assert qmath.trace(op) == pytest.approx(1)
        assert not qmath.is_psd(op)
        assert np.linalg.norm(b) == pytest.approx(np.sqrt(3), abs=1e-10)
        blochs.append(b)
    blochs = np.array(blochs)
    gram = blochs @ blochs.T / 3
    # three antipodal pairs along mutually orthogonal axes
    assert_allclose(np.sort(gram, axis=1), np.tile([-1, 0, 0, 0, 0, 1], (6, 1)), atol=1e-10)
    assert_allclose(np.abs(blochs).max(axis=1), np.sqrt(3), atol=1e-10)


def test_dispersion_free_rejects_inadmissible():
    with pytest.raises(ValueError):
        hv.dispersion_free_operator("++++")


def test_singlet_update_rule(qubit_plus, qubit_minus):
    rho = hv.singlet_state()
    for i in range(4):
        assert_allclose(hv.right_state_after(rho, qubit_plus.projectors[i]), qubit_minus.projectors[i], atol=1e-12)
        assert_allclose(hv.right_state_after(rho, qubit_minus.projectors[i]), qubit_plus.projectors[i], atol=1e-12)


def test_anticoincidence_examples():
    assert hv.anticoincidence(0, 0) == pytest.approx((1, 1))
    assert hv.anticoincidence(0, 1) == pytest.approx((1 / 3, 1 / 3))


def test_anticoincidence_table():
    quantum, hidden = hv.anticoincidence_table()
    expected = np.full((4, 4), 1 / 3) + np.eye(4) * (2 / 3)
    assert_allclose(quantum, expected, atol=1e-10)
    assert_allclose(hidden, expected, atol=1e-15)
    assert np.max(np.abs(quantum - hidden)) < 1e-10


def test_anticoincidence_hv_brute_force():
    # oracle: enumerate the six source pairs (lambda, -lambda) directly
    pairs = [(s, "".join("+" if ch == "-" else "-" for ch in s)) for s in LISTED]
    for i, j in itertools.product(range(4), repeat=2):
        frac = sum(left[i] != right[j] for left, right in pairs) / 6
        assert hv.anticoincidence(i, j)[1] == pytest.approx(frac)


def test_anticoincidence_bad_setting():
    with pytest.raises(ValueError):
        hv.anticoincidence(4, 0)


def test_feasibility_json(qubit_plus):
    data = hv.hv_from_state(np.eye(2) / 2, qubit_plus).to_dict()
    assert data["feasible"] is True and len(data["witness"]) == 6
    data = hv.hv_from_state(qmath.bloch_to_operator([1, 0, 0]), qubit_plus).to_dict()
    assert data["feasible"] is False and data["witness"] is None and data["margin"] < 0


def test_anticoincidence_csv():
    lines = hv.anticoincidence_csv().strip().splitlines()
    assert lines[0] == "left,right,quantum,hidden_variable"
    assert len(lines) == 17
