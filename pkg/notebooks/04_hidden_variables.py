# ---
# jupyter:
#   jupytext:
#     text_representation:
#       format_name: light
# ---

# # A toy hidden-variable model for a qubit
#
# Six instruction sets assign 0 or 1 to each tetrahedron projector, two ones
# apiece. Mixtures of them reproduce some qubit states but not all.

import numpy as np

from sporadic_sics import build_sic, qmath
from sporadic_sics import hidden_variables as hv

sets = hv.enumerate_instruction_sets()
print(sets)
print(hv.hv_matrix(sets))

# The states that the model reproduces fill a cube inscribed in the Bloch ball.

plus = build_sic("qubit-plus")
for name, bloch in [("tetrahedron vertex", hv.QUBIT_PLUS_BLOCH[0]), ("Z eigenstate", np.array([0, 0, 1.0]))]:
    result = hv.hv_from_state(qmath.bloch_to_operator(bloch), plus)
    print(f"{name:20s} feasible={result.feasible}  margin={result.margin:+.4f}")

# A single instruction set, read as a quantum state, sits outside the Bloch ball.

for s in sets:
    op, bloch = hv.dispersion_free_operator(s, plus)
    print(s, np.round(bloch, 4), "psd" if qmath.is_psd(op) else "not psd")

# Anti-coincidence on the singlet: the quantum table and the uniform hidden-variable table agree.

quantum, hidden = hv.anticoincidence_table()
print(np.round(quantum, 4))
print(np.max(np.abs(quantum - hidden)))
