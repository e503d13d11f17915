"""
Stable sets versus cliques
==========================

A graph with no stable set of size k has at most w^(k-1) + ... + w vertices,
where w is its clique number.  ramsey_witness either finds the stable set or
hands back the numeric certificate.
"""

from starchi import build_graph, clique_number, ramsey_bound, ramsey_witness
from starchi.graph import cycle_graph, petersen_graph

# C5 has clique number 2 and no stable triple, so it must fit under 2^2 + 2
c5 = cycle_graph(5)
print("omega(C5) =", clique_number(c5))
print("bound for k=3:", ramsey_bound(2, 3))
print(ramsey_witness(c5, 3))

# the Petersen graph does have a stable set of size 4
pet = petersen_graph()
out = ramsey_witness(pet, 4)
print(out, "via", out.route)
assert out.is_valid(pet, 4)

# a triangle with a pendant path: the stable triple avoids the triangle
g = build_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 4), (1, 5), (2, 3), (2, 5)])
out = ramsey_witness(g, 3)
print(out, "via", out.route)
