"""Random instance generators.  Every generator is a pure function of its
seed (and chunk number), so reruns and parallel runs see the same graphs."""
from __future__ import annotations

import math
from typing import Iterator

import numpy as np

from ..graph import Graph
from .streams import Chunk

DENSE_LOW = 0.8
DENSE_HIGH = 1.0
SAMPLE_CHUNK = 2000


def dense_batch(rng: np.random.Generator, n: int, count: int,
                low: float = DENSE_LOW, high: float = DENSE_HIGH) -> np.ndarray:
    """``count`` graphs G(n, p) with p drawn uniformly from [low, high] per graph."""
    p = rng.uniform(low, high, size=count)
    coins = rng.random((count, n, n)) < p[:, None, None]
    upper = np.triu(coins, k=1)
    return upper | upper.transpose(0, 2, 1)


def dense_chunks(n: int, count: int, seed: int, size: int = SAMPLE_CHUNK) -> Iterator[Chunk]:
    start = 0
    k = 0
    while start < count:
        b = min(size, count - start)
        rng = np.random.default_rng([seed, k])
        yield Chunk(start, n=n, adj=dense_batch(rng, n, b))
        start += b
        k += 1


# -- spectral comparison tuples ---------------------------------------------

def comparison_admissible(s: int, p: int, parts) -> bool:
    """n_1 >= ... >= n_t >= p and n_1 < n - s - p(t - 1), with n = s + sum(parts)."""
    parts = list(parts)
    if s < 0 or p < 1 or not parts:
        return False
    if any(a < b for a, b in zip(parts, parts[1:])) or parts[-1] < p:
        return False
    return parts[0] < sum(parts) - p * (len(parts) - 1)


def random_comparison_tuple(rng: np.random.Generator):
    """Draw (s, p, parts); not necessarily admissible."""
    s = int(rng.integers(1, 6))
    p = int(rng.integers(1, 4))
    t = int(rng.integers(2, 5))
    parts = sorted((p + int(x) for x in rng.integers(0, 6, size=t)), reverse=True)
    return s, p, tuple(parts)


# -- dense graphs with forced edges -----------------------------------------

def _pairs(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _drop_random(rng, n: int, count: int) -> Graph:
    """K_n minus ``count`` random pairs."""
    pool = _pairs(n)
    drop = set()
    if count > 0:
        drop = {pool[i] for i in rng.choice(len(pool), size=count, replace=False)}
    return Graph.from_edges(n, [e for e in pool if e not in drop])


def _budget_draw(rng, budget: int) -> int:
    # half the draws sit right at the edge-count boundary
    if budget <= 0:
        return 0
    return budget if rng.random() < 0.5 else int(rng.integers(0, budget + 1))


def random_linear_forest(rng, vertices: list[int], k: int) -> list[tuple[int, int]]:
    """k edges forming vertex-disjoint paths on a prefix of ``vertices``."""
    paths = []
    left = k
    while left:
        length = int(rng.integers(1, left + 1))
        paths.append(length)
        left -= length
    edges = []
    pos = 0
    for length in paths:
        chain = vertices[pos:pos + length + 1]
        edges += [tuple(sorted(e)) for e in zip(chain, chain[1:])]
        pos += length + 1
    return edges


def matching_cycle_instance(rng):
    """A graph with e >= C(n-1, 2) + k + 2 and a k-edge linear forest M
    such that G[V(M)] has maximum degree at most 2.

    Returns (graph, M) or None when the draw cannot meet the edge count.
    """
    k = int(rng.integers(1, 5))
    n = int(rng.integers(k + 3, 15))
    order = [int(v) for v in rng.permutation(n)]
    m_edges = random_linear_forest(rng, order, k)
    inside = sorted({v for e in m_edges for v in e})
    # G[V(M)]: the forest plus random extra pairs while degrees stay <= 2
    deg = {v: 0 for v in inside}
    present = set(m_edges)
    for u, v in m_edges:
        deg[u] += 1
        deg[v] += 1
    extra = [e for e in _pairs(n) if e[0] in deg and e[1] in deg and e not in present]
    for i in rng.permutation(len(extra)):
        u, v = extra[i]
        if deg[u] < 2 and deg[v] < 2:
            present.add((u, v))
            deg[u] += 1
            deg[v] += 1
    forced_missing = {e for e in extra if e not in present}
    budget = n - k - 3 - len(forced_missing)
    if budget < 0:
        return None
    inner = {e for e in _pairs(n) if e[0] in deg and e[1] in deg}
    drop = _budget_draw(rng, budget)
    pool = [e for e in _pairs(n) if e not in inner]
    gone = set(forced_missing)
    if drop:
        gone |= {pool[i] for i in rng.choice(len(pool), size=min(drop, len(pool)), replace=False)}
    g = Graph.from_edges(n, [e for e in _pairs(n) if e not in gone])
    return g, m_edges


def two_edge_instance(rng):
    """n in [15, 18], e >= C(n-1, 2), min degree >= 4, plus two distinct
    random edges.  None when the draw breaks the degree bound."""
    n = int(rng.integers(15, 19))
    drop = _budget_draw(rng, n - 1)
    g = _drop_random(rng, n, drop)
    if g.min_degree < 4:
        return None
    edges = g.edges()
    i, j = rng.choice(len(edges), size=2, replace=False)
    return g, [edges[int(i)], edges[int(j)]]


def dense_connectivity_instance(rng):
    """n in [13, 16], e >= C(n-2, 2) + 6, min degree >= 3 (connected)."""
    n = int(rng.integers(13, 17))
    budget = math.comb(n, 2) - math.comb(n - 2, 2) - 6
    g = _drop_random(rng, n, _budget_draw(rng, budget))
    if g.min_degree < 3:
        return None
    return g
