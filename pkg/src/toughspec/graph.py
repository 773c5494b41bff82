"""Simple undirected graphs backed by a dense boolean adjacency matrix.

Vertices are the integers ``0..n-1``.  A :class:`Graph` never changes after
construction; every operation that "modifies" a graph returns a new one.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class Graph:
    """Immutable simple graph.

    Parameters
    ----------
    adj : array_like
        Square boolean (or 0/1) matrix.  Must be symmetric with a zero
        diagonal.
    """

    def __init__(self, adj):
        a = np.array(adj, dtype=bool, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {a.shape}")
        if a.shape[0] and a.diagonal().any():
            raise ValueError("adjacency has a nonzero diagonal (self-loop)")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency is not symmetric")
        a.setflags(write=False)
        self._adj = a

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            a[u, v] = a[v, u] = True
        return cls(a)

    @classmethod
    def _trusted(cls, a: np.ndarray) -> Graph:
        # skips validation; caller guarantees a symmetric bool matrix, zero diagonal
        g = cls.__new__(cls)
        a = np.asarray(a, dtype=bool)
        a.setflags(write=False)
        g._adj = a
        return g

    @property
    def adj(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adj

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    def __len__(self):
        return self.n

    @cached_property
    def degrees(self) -> np.ndarray:
        d = self._adj.sum(axis=1).astype(np.int64)
        d.setflags(write=False)
        return d

    @cached_property
    def m(self) -> int:
        return int(self.degrees.sum()) // 2

    @property
    def min_degree(self) -> int:
        return int(self.degrees.min()) if self.n else 0

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an integer bitmask."""
        return tuple(sum(1 << int(j) for j in np.flatnonzero(row)) for row in self._adj)

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self._adj[v]).tolist()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self._adj, 1))
        return list(zip(iu.tolist(), ju.tolist()))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabelled in the given order."""
        idx = np.asarray(list(vertices), dtype=np.intp)
        return Graph._trusted(self._adj[np.ix_(idx, idx)].copy())

    def remove_vertices(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        return self.induced([v for v in range(self.n) if v not in drop])

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        a = self._adj.copy()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            a[u, v] = a[v, u] = True
        return Graph._trusted(a)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        a = self._adj.copy()
        for u, v in edges:
            a[u, v] = a[v, u] = False
        return Graph._trusted(a)

    def complement(self) -> Graph:
        a = ~self._adj
        np.fill_diagonal(a, False)
        return Graph._trusted(a)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        perm = np.asarray(perm, dtype=np.intp)
        if sorted(perm.tolist()) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertices")
        inv = np.empty_like(perm)
        inv[perm] = np.arange(self.n)
        return Graph._trusted(self._adj[np.ix_(inv, inv)].copy())

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_regular(self) -> bool:
        return self.n == 0 or self.min_degree == self.max_degree

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj.shape == other._adj.shape and bool(np.array_equal(self._adj, other._adj))

    def __hash__(self):
        return hash((self.n, np.packbits(self._adj).tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Ascending degree sequence d_1 <= ... <= d_n."""
    return tuple(sorted(g.degrees.tolist()))


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    masks = g.masks
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            reach = 0
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                reach |= masks[b.bit_length() - 1]
            frontier = reach & ~comp
            comp |= frontier
        remaining &= ~comp
        comps.append([v for v in range(g.n) if comp >> v & 1])
    return comps


def component_count(g: Graph) -> int:
    return len(components(g))


def is_connected(g: Graph) -> bool:
    return g.n > 0 and component_count(g) == 1


# -- construction algebra -------------------------------------------------

def empty_graph(n: int) -> Graph:
    """nK_1: n isolated vertices."""
    return Graph._trusted(np.zeros((n, n), dtype=bool))


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = np.ones((n, n), dtype=bool)
    np.fill_diagonal(a, False)
    return Graph._trusted(a)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre labelled 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def union(*graphs: Graph) -> Graph:
    """Disjoint union; later graphs are shifted past earlier ones."""
    n = sum(g.n for g in graphs)
    a = np.zeros((n, n), dtype=bool)
    off = 0
    for g in graphs:
        a[off:off + g.n, off:off + g.n] = g.adj
        off += g.n
    return Graph._trusted(a)


def join(g: Graph, h: Graph) -> Graph:
    a = union(g, h).adj.copy()
    a[:g.n, g.n:] = True
    a[g.n:, :g.n] = True
    return Graph._trusted(a)


def copies(k: int, g: Graph) -> Graph:
    """kG: disjoint union of k copies of g."""
    return union(*([g] * k)) if k else empty_graph(0)

