"""
Certifying the counterexample
=============================

For r=4, delta=1, eps=1/1000 we find the least blow-up factor a meeting the
parameter condition, then compare densities in exact rationals: the K_4-free
host S against the unique-colouring bound for every complete 3-partite host.
"""
from fractions import Fraction

from genturan.asymptotics import TheoremParams, minimal_a
from genturan.cli import scan_rows
from genturan.extremal import finite_n_comparison, verify_counterexample

# %%
eps, delta = Fraction(1, 1000), Fraction(1)
a = minimal_a(4, delta, eps)
print("least feasible a:", a)

report = verify_counterexample(TheoremParams(4, delta, eps, a))
print(report.summary())

# %%
# The condition flips exactly once as a grows.
for row in scan_rows(4, delta, [eps], range(a - 2, a + 3)):
    print(row["a"], row["feasible"], row["ratio_decimal"])

# %%
# At desk-scale n the asymptotic regime is far away.  For a=1 the exact
# finite counts are recorded for comparison only.
for row in finite_n_comparison(4, 1, Fraction(1, 12), [12, 18, 24, 36]):
    print(row["n"], row["s_count"], row["partite_max"], row["partite_argmax"], row["s_wins"])
