"""
Watching the decomposition
==========================

On small inputs the greedy leaf always wins, so the recursion never splits.
A threshold override of 1 forces it to peel cliques from a max-degree
neighbourhood and colour each part from its own palette block.
"""

import json

from starchi import ColorConfig, audit_trace, color_star_forest_free, parse_pattern
from starchi.generators import complete_multipartite

# complete multipartite graphs are 2K2-free.  The max-degree neighbourhood
# must hold w^(k+1) disjoint max cliques, which K_{5,5} just manages.
g = complete_multipartite([5, 5])
h = parse_pattern("2xK2")
res = color_star_forest_free(g, h, ColorConfig(threshold_override=1))

for node in res.trace.walk():
    print("  " * node.level + f"{node.kind} |V|={len(node.vertices)} omega={node.omega} colours={node.colors_used}")
    d = node.decomposition
    if d is not None:
        print("  " * node.level + f"  v={d.v} t={d.t} n={d.n} blocks={len(d.blocks)} palette_bound={d.palette_bound}")

# with three parts there are too few cliques and the run falls back to greedy
small = color_star_forest_free(complete_multipartite([4, 4, 4]), h, ColorConfig(threshold_override=1))
print(small.trace.kind, small.trace.note)

print("audit:", audit_trace(g, res) or "clean")
print(json.dumps(res.certificate.to_dict(), indent=2))
