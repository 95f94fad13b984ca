# ---
# jupyter:
#   jupytext:
#     text_representation:
#       format_name: light
# ---

# # Building the sporadic SICs
#
# Four SIC sets ship with the package: two qubit tetrahedra, the Hesse SIC in
# dimension 3 and the Hoggar SIC in dimension 8. Each is checked for
# equiangularity and for summing to the identity.

import numpy as np

from sporadic_sics import build_sic, verify_sic
from sporadic_sics.constructions import build_qutrit_mubs

for label in ("qubit-plus", "qubit-minus", "hesse", "hoggar"):
    sic = build_sic(label)
    report = verify_sic(sic)
    print(f"{label:12s} d={sic.dim}  n={len(sic):2d}  passed={report.passed}")

# The Gram matrix of squared overlaps has 1 on the diagonal and 1/(d+1) elsewhere.

hoggar = build_sic("hoggar")
gram = hoggar.gram()
print(np.unique(np.round(gram, 12)))

# The Hesse SIC determines twelve vectors, one for each line of the affine
# plane on nine points. Grouped by parallel class they form four mutually
# unbiased bases.

mubs = build_qutrit_mubs(build_sic("hesse"))
for basis in mubs.bases:
    print([mubs.labels[k] for k in basis])
