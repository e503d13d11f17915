from hypothesis import strategies as st

from starchi.graph import build_graph
from starchi.starforest import StarForest


@st.composite
def graphs(draw, max_n=12, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, k in zip(pairs, keep) if k])


def star_forests(max_order=5):
    return st.lists(st.integers(0, max_order - 1), max_size=3).map(StarForest).filter(
        lambda h: h.order <= max_order
    )
