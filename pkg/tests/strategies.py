from itertools import combinations

from hypothesis import strategies as st

from pivd.graph import Graph


@st.composite
def graphs(draw, max_vertices=10, min_vertices=0):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges([e for e, b in zip(pairs, keep) if b], vertices=range(n))


@st.composite
def unit_interval_graphs(draw, max_vertices=14):
    n = draw(st.integers(1, max_vertices))
    xs = draw(st.lists(st.integers(0, 4 * n), min_size=n, max_size=n))
    # unit length 4 on an integer grid; strict inequality keeps touching intervals apart
    return Graph.from_edges([(i, j) for i, j in combinations(range(n), 2) if abs(xs[i] - xs[j]) < 4], vertices=range(n))
