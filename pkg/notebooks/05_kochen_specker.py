# ---
# jupyter:
#   jupytext:
#     text_representation:
#       format_name: light
# ---

# # A Kochen-Specker argument in dimension 3
#
# Every Hesse projector is orthogonal to four of the twelve MUB vectors.
# A noncontextual assignment picks one vector per basis, which zeroes out
# the SIC projectors orthogonal to it.

from collections import Counter

from sporadic_sics import build_sic
from sporadic_sics import kochen_specker as ks
from sporadic_sics.constructions import build_qutrit_mubs

hesse = build_sic("hesse")
mubs = build_qutrit_mubs(hesse)
graph = ks.build_graph(hesse, mubs)
print("edges", len(graph.edges), "degrees", graph.degrees())

# Count the SIC projectors left standing under each of the 81 assignments.

report = ks.ks_report(hesse, mubs)
print(Counter(s for _, s in report.per_assignment))
print("best", report.max_achievable, "needed", report.required_sum, "contradiction", report.contradiction)

# The Born rule has no trouble: the Hesse projectors always sum to 3 in expectation.

print(report.born_sums[:5])
