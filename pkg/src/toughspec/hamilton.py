"""Exact Hamiltonian cycle / path search and degree-sequence conditions.

The cycle search extends a path from a lowest-degree start vertex.  Both
edges at a degree-2 vertex are forced up front, alongside any caller-supplied
required edges.  A branch dies when an unvisited vertex keeps fewer than two
usable edges or the unvisited vertices stop being connected.  Failed
(visited-set, endpoint) states are memoised, which turns the worst case
into the usual O(2^n n) dynamic programme.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph
from .toughness import count_components


@dataclass(frozen=True)
class CyclePath:
    vertices: tuple[int, ...]
    closed: bool

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        out = [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.closed and len(vs) > 2:
            out.append((vs[-1], vs[0]))
        return out

    def is_valid_in(self, g: Graph, *, spanning: bool = True) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        if spanning and len(vs) != g.n:
            return False
        return all(g.has_edge(u, v) for u, v in self.edges())


def _norm(u, v):
    return (u, v) if u < v else (v, u)


def _cycle_search(g: Graph, required: Iterable[tuple[int, int]]):
    n = g.n
    masks = g.masks
    full = (1 << n) - 1
    req = [0] * n
    for u, v in required:
        req[u] |= 1 << v
        req[v] |= 1 << u
    for v in range(n):
        d = masks[v].bit_count()
        if d < 2:
            return None
        if d == 2:
            req[v] |= masks[v]
            for w in g.neighbors(v):
                req[w] |= 1 << v
    if any(r.bit_count() > 2 for r in req):
        return None

    # required edges must form paths, or one spanning cycle
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    req_edges = {_norm(u, v) for u in range(n) for v in range(n) if req[u] >> v & 1}
    for u, v in req_edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            # a closed cycle is only acceptable if it is spanning
            order, prev, cur = [u], v, u
            while True:
                nxt = [w for w in range(n) if req[cur] >> w & 1 and w != prev][0]
                if nxt == u:
                    break
                prev, cur = cur, nxt
                order.append(cur)
            return order if len(order) == n else None
        parent[ru] = rv

    degs = [m.bit_count() for m in masks]
    start = min(range(n), key=lambda v: (degs[v], v))
    sbit = 1 << start
    start_req = sorted(w for w in range(n) if req[start] >> w & 1)
    first = start_req[0] if start_req else None
    last = start_req[1] if len(start_req) == 2 else None
    lastbit = (1 << last) if last is not None else 0
    failed: set[tuple[int, int]] = set()
    path = [start]

    def viable(w, newmask):
        rw = req[w]
        if rw.bit_count() == 2 and not rw >> path[-1] & 1:
            return False
        back = rw & newmask & ~(1 << path[-1])
        if back and (back != sbit or newmask != full):
            return False
        if lastbit and w == last and newmask != full:
            return False
        left = full & ~newmask
        if not left:
            return True
        ends = 1 << w | sbit
        x = left
        while x:
            b = x & -x
            x ^= b
            if (masks[b.bit_length() - 1] & (left | ends)).bit_count() < 2:
                return False
        return count_components(masks, left) == 1

    def extend(end, mask):
        if mask == full:
            return bool(masks[end] & sbit) and (last is None or end == last)
        if (mask, end) in failed:
            return False
        forced = req[end] & ~mask
        if forced.bit_count() > 1:
            failed.add((mask, end))
            return False
        cands = forced if forced else masks[end] & ~mask
        order = []
        x = cands
        while x:
            b = x & -x
            x ^= b
            w = b.bit_length() - 1
            order.append(((masks[w] & ~mask).bit_count(), w))
        order.sort()
        for _, w in order:
            newmask = mask | 1 << w
            if not viable(w, newmask):
                continue
            path.append(w)
            if extend(w, newmask):
                return True
            path.pop()
        failed.add((mask, end))
        return False

    if first is not None:
        if not viable(first, sbit | 1 << first):
            return None
        path.append(first)
        ok = extend(first, sbit | 1 << first)
    else:
        ok = extend(start, sbit)
    return list(path) if ok else None


def hamiltonian_cycle_through(g: Graph, edges: Iterable[tuple[int, int]]) -> CyclePath | None:
    """A Hamiltonian cycle of ``g`` containing every edge in ``edges``, or None."""
    if g.n < 3:
        raise ValueError("Hamiltonian cycles need n >= 3")
    edges = [tuple(e) for e in edges]
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"required edge ({u}, {v}) is not an edge of the graph")
    order = _cycle_search(g, edges)
    return CyclePath(tuple(order), True) if order is not None else None


def hamiltonian_cycle(g: Graph) -> CyclePath | None:
    return hamiltonian_cycle_through(g, [])


def hamiltonian_path(g: Graph, u: int, v: int) -> CyclePath | None:
    """A Hamiltonian path from ``u`` to ``v``, or None."""
    if u == v:
        raise ValueError("endpoints must differ")
    if g.n == 2:
        return CyclePath((u, v), False) if g.has_edge(u, v) else None
    h = g.add_edges([(u, v)])
    order = _cycle_search(h, [(u, v)])
    if order is None:
        return None
    i = order.index(u)
    order = order[i:] + order[:i]
    if order[1] == v:
        order = [u] + order[1:][::-1]
    return CyclePath(tuple(order), False)


def is_hamiltonian_connected(g: Graph) -> bool:
    """Every pair of distinct vertices is joined by a Hamiltonian path."""
    n = g.n
    if n < 3:
        raise ValueError("need n >= 3")
    if n >= 4 and g.min_degree < 3:
        # the middle of a forced path through a degree-2 vertex blocks its two neighbours
        return False
    for u in range(n):
        for v in range(u + 1, n):
            if hamiltonian_path(g, u, v) is None:
                return False
    return True


def chvatal_condition(g: Graph) -> bool:
    """For every 1 <= i < n/2: d_i <= i implies d_{n-i+1} >= n - i."""
    d = sorted(g.degrees.tolist())
    n = len(d)
    i = 1
    while 2 * i < n:
        if d[i - 1] <= i and d[n - i] < n - i:
            return False
        i += 1
    return True


def theta_index(g: Graph) -> int | None:
    """Smallest 1-based index with d_i >= n/2 in the ascending degree sequence."""
    d = sorted(g.degrees.tolist())
    for i, x in enumerate(d, start=1):
        if 2 * x >= len(d):
            return i
    return None
