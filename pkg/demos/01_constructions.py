"""
Building the graphs H, G, Q and S
=================================

Everything starts from two small graphs: a clique K_{r-3} and a path P_6.
Joining them gives H; blowing up the two path endpoints gives the pattern G;
gluing the endpoints gives Q = K_{r-3} + C_5; and a weighted blow-up of Q
gives the K_r-free host S.
"""
from fractions import Fraction

from genturan.extremal import (
    H_endvertices,
    Q_contracted_vertex,
    build_G,
    build_H,
    build_Q,
    build_S_spec,
)
from genturan.graphcore import contract_nonadjacent, to_dot
from genturan.props import chromatic_number, clique_number, diameter, is_Kr_free_blowup

# %%
# H for a few values of r.  The clique comes first in the labelling, then the
# path in order, so the endpoints x, y are easy to find.
for r in (4, 7, 11):
    h = build_H(r)
    x, y = H_endvertices(r)
    print(f"r={r:2d}: H has {h.n} vertices, {h.num_edges} edges, x={x}, y={y}")

# %%
# G blows up x and y into independent sets of size a.  It keeps diameter 2 and
# needs exactly r-1 colours.
for a in (1, 2, 3):
    g = build_G(4, a).expand()
    print(f"a={a}: |G|={g.n}, diameter={diameter(g)}, chi={chromatic_number(g)}")

# %%
# Contracting x and y in H gives Q exactly, with the merged vertex z at label x.
r = 4
x, y = H_endvertices(r)
assert contract_nonadjacent(build_H(r), x, y) == build_Q(r)
print("Q has clique number", clique_number(build_Q(r)), "and z =", Q_contracted_vertex(r))

# %%
# S puts almost all n vertices into the part of z.  It has no K_r since C_5 has
# no triangle.
s = build_S_spec(r, 60, Fraction(1, 12))
print("S part sizes:", s.weights, "K_4-free:", is_Kr_free_blowup(s, 4))

# %%
# DOT text for Graphviz; the big part is drawn as a larger node.
print(to_dot(s, name="S", highlight=[Q_contracted_vertex(r)]))
