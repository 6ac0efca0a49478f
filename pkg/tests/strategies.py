from hypothesis import strategies as st

from higherchar.generators import random_whitney


@st.composite
def random_complexes(draw, max_vertices=7, max_edges=12):
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    cap = min(max_edges, n * (n - 1) // 2)
    m = draw(st.integers(min_value=0, max_value=cap))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_whitney(n, m, seed)
