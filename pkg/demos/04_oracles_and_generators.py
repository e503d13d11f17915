"""
Exact oracles and reproducible graphs
=====================================
"""

from starchi import (
    GenSpec,
    chromatic_number_exact,
    clique_number,
    contains_induced_star_forest,
    max_stable_set,
    mycielski,
    parse_pattern,
    write_graph6,
)
from starchi.generators import generate
from starchi.graph import cycle_graph, petersen_graph

pet = petersen_graph()
print("Petersen:", clique_number(pet), len(max_stable_set(pet)), chromatic_number_exact(pet))

grotzsch = mycielski(cycle_graph(5))
print("Grotzsch:", grotzsch.n, clique_number(grotzsch), chromatic_number_exact(grotzsch))

# an induced 2K2 in C6, with the embedding
emb = contains_induced_star_forest(cycle_graph(6), parse_pattern("2xK2"))
print(emb.to_dict())

# same spec, same graph6 bytes
spec = GenSpec(family="gnp", n=12, p="1/2", seed=42)
print(spec.to_json())
print(write_graph6(generate(spec)), write_graph6(generate(GenSpec.from_json(spec.to_json()))))
