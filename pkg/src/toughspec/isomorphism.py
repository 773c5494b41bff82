"""Graph isomorphism by colour refinement plus individualisation.

Both graphs are refined with one shared colour table per round, so a colour
id means the same thing on both sides and colour histograms can be
compared directly.  No canonical forms are cached.
"""
from __future__ import annotations

from collections import Counter

from .errors import CapacityError
from .graph import Graph

DEFAULT_CAP = 16


def _refine(nbrs_g, nbrs_h, cg, ch):
    while True:
        table: dict = {}
        ng = [table.setdefault((cg[v], tuple(sorted(cg[u] for u in nb))), len(table))
              for v, nb in enumerate(nbrs_g)]
        nh = [table.setdefault((ch[v], tuple(sorted(ch[u] for u in nb))), len(table))
              for v, nb in enumerate(nbrs_h)]
        if Counter(ng) != Counter(nh):
            return None
        if len(set(ng)) == len(set(cg)):
            return ng, nh
        cg, ch = ng, nh


def _match(g, h, nbrs_g, nbrs_h, cg, ch):
    res = _refine(nbrs_g, nbrs_h, cg, ch)
    if res is None:
        return None
    cg, ch = res
    sizes = Counter(cg)
    open_cells = [c for c, k in sizes.items() if k > 1]
    if not open_cells:
        where = {c: v for v, c in enumerate(ch)}
        perm = [where[c] for c in cg]
        ok = all(g.has_edge(u, v) == h.has_edge(perm[u], perm[v])
                 for u in range(g.n) for v in range(u + 1, g.n))
        return perm if ok else None
    cell = min(open_cells, key=lambda c: (sizes[c], c))
    v = cg.index(cell)
    fresh = max(max(cg), max(ch)) + 1
    for w in [x for x, c in enumerate(ch) if c == cell]:
        cg2 = list(cg)
        ch2 = list(ch)
        cg2[v] = fresh
        ch2[w] = fresh
        perm = _match(g, h, nbrs_g, nbrs_h, cg2, ch2)
        if perm is not None:
            return perm
    return None


def find_isomorphism(g: Graph, h: Graph, *, cap: int | None = DEFAULT_CAP):
    """A list ``perm`` with ``g.relabel(perm) == h``, or None."""
    if g.n != h.n or g.m != h.m:
        return None
    if cap is not None and g.n > cap:
        raise CapacityError(f"n = {g.n} exceeds the isomorphism cap {cap}")
    if sorted(g.degrees.tolist()) != sorted(h.degrees.tolist()):
        return None
    if g.n == 0:
        return []
    nbrs_g = [g.neighbors(v) for v in range(g.n)]
    nbrs_h = [h.neighbors(v) for v in range(h.n)]
    return _match(g, h, nbrs_g, nbrs_h, [0] * g.n, [0] * h.n)


def is_isomorphic(g: Graph, h: Graph, *, cap: int | None = DEFAULT_CAP) -> bool:
    return find_isomorphism(g, h, cap=cap) is not None
