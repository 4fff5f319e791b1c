"""
Density polynomials and the best multipartite host
==================================================

When part b of a blow-up has alpha_b * n vertices, the labelled count of a
pattern grows like n^|P| times a polynomial in alpha.  Maximising that
polynomial over the simplex gives the best complete multipartite density.
"""
from fractions import Fraction

import numpy as np

from genturan.asymptotics import density_polynomial, evaluate
from genturan.extremal import build_G, max_partite_density
from genturan.graphcore import PatternWithDemands, complete

# %%
# Triangles in a balanced complete 3-partite graph: 6 * (1/3)^3 = 2/9.
k3 = density_polynomial(PatternWithDemands(complete(3)), complete(3))
print("K3 density at uniform point:", evaluate(k3, [Fraction(1, 3)] * 3))

# %%
# The optimizer runs in floating point, then snaps to a rational point and
# evaluates there exactly.  The returned value is therefore attained.
for a in (1, 2, 3, 26):
    value, alpha = max_partite_density(build_G(4, a), 3)
    print(f"a={a:2d}: best density {float(value):.4e} at {[str(x) for x in alpha]}, bound 4^-a = {0.25**a:.4e}")

# %%
# The analytic gradient agrees with central differences.
poly = density_polynomial(build_G(4, 2), complete(3))
x = np.array([0.2, 0.35, 0.45])
h = 1e-6
fd = [(poly.value_float(x + h * e) - poly.value_float(x - h * e)) / (2 * h) for e in np.eye(3)]
print("gradient", poly.gradient_float(x), "finite differences", np.array(fd))
