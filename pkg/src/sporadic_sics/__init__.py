"""Sporadic SICs (qubit, Hesse, Hoggar), their probabilistic representation of
quantum states, and exhaustive checks of Bell and Kochen-Specker nonclassicality."""

from .constructions import (
    MubSet,
    SicSet,
    build_hesse_sic,
    build_hoggar_sic,
    build_qubit_sic,
    build_qutrit_mubs,
    build_sic,
    three_qubit_pauli_group,
    verify_sic,
)
from .representation import (
    conditional_matrix,
    gauge_apply,
    negativity,
    probs_to_state,
    quasiprob,
    sic_expectation,
    state_to_probs,
    urgleichung,
)

__version__ = "0.1.0"
