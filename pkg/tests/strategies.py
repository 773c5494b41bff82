import numpy as np
from hypothesis import strategies as st

from toughspec.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=10, density=None):
    n = draw(st.integers(min_n, max_n))
    pairs = n * (n - 1) // 2
    if density is None:
        bits = draw(st.lists(st.booleans(), min_size=pairs, max_size=pairs))
    else:
        seed = draw(st.integers(0, 2**32 - 1))
        bits = (np.random.default_rng(seed).random(pairs) < density).tolist()
    a = np.zeros((n, n), dtype=bool)
    iu = np.triu_indices(n, 1)
    a[iu] = bits
    return Graph(a | a.T)
