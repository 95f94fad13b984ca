# ---
# jupyter:
#   jupytext:
#     text_representation:
#       format_name: light
# ---

# # States as probability vectors
#
# A SIC turns any density matrix into a probability vector, and the map
# can be inverted. The Born rule for any other measurement then becomes a
# small deformation of the law of total probability.

import numpy as np

from sporadic_sics import qmath
from sporadic_sics import build_sic
from sporadic_sics.representation import (
    born_probabilities,
    conditional_matrix,
    gauge_apply,
    negativity,
    probs_to_state,
    quasiprob,
    state_to_probs,
    urgleichung,
)

rng = np.random.default_rng(7)
sic = build_sic("hesse")
rho = qmath.random_density(3, rng)
p = state_to_probs(rho, sic)
back, psd = probs_to_state(p, sic)
print("p =", np.round(p, 4), " sum", p.sum())
print("round trip error", np.max(np.abs(back - rho)), " psd", psd)

# Pick a random four-outcome measurement and compare the two routes to its
# outcome probabilities.

povm = qmath.random_povm(3, 4, rng)
cond = conditional_matrix(povm, sic)
print(urgleichung(p, cond))
print(born_probabilities(rho, povm))

# Where the deformation is placed does not matter.

for placement in ("right", "left", "split"):
    print(placement, gauge_apply(cond, p, placement))

# Quasi-probabilities go negative for some states. A pure state is a good place to look.

ket = qmath.random_ket(3, rng)
q = quasiprob(state_to_probs(qmath.ket_to_density(ket), sic))
print("quasi-probabilities", np.round(q, 4), " negativity", negativity(q))
