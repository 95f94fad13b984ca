# ---
# jupyter:
#   jupytext:
#     text_representation:
#       format_name: light
# ---

# # Mermin's inequality through the Hoggar SIC
#
# Local hidden variables keep the Mermin combination at plus or minus 2.
# The GHZ state reaches 4.

from collections import Counter

from sporadic_sics import build_sic, mermin

print(Counter(v for _, v in mermin.enumerate_lhv()))
print("B(GHZ) =", mermin.bell_value(mermin.ghz_state()))

# Each Hoggar projector assigns every Mermin operator an expectation of
# plus or minus 1/3, so no single row can exceed the local bound.

hoggar = build_sic("hoggar")
table = mermin.expectation_table(hoggar)
print(table.to_csv().splitlines()[:5])

# Averaging those rows with the GHZ probabilities gives 4/9. The factor d+1 = 9
# restores the quantum value 4.

report = mermin.ghz_sic_analysis(hoggar)
print(report.per_operator_sums, report.undeformed_total, report.deformed_total)
print(report.verdict)

# The same machinery gives the probability that three X measurements on GHZ
# produce an odd number of + outcomes. It is certain.

parity = mermin.ghz_parity(hoggar)
print(parity.overlap_sums)
print("P(odd) =", parity.p_odd)
