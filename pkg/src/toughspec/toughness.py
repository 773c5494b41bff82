"""Exact toughness by pruned cut-set enumeration.

Two reductions keep the search small:

* Twins.  If u and v have N(u) - v == N(v) - u, every minimizing S contains
  both or neither (moving the lone twin out of S keeps c(G - S) and shrinks
  |S|).  Only unions of twin classes are enumerated.
* Degrees.  If G - S has c components, picking one vertex from each gives
  c distinct vertices whose degrees sum to at most c(|S| - 1) + n - |S|.
  A size is skipped when the c smallest degrees already exceed that.

Sizes are visited in increasing order and the search stops once
|S| / (n - |S|), the best ratio a size could reach, exceeds the incumbent.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapacityError, EmptyGraphError
from .graph import Graph

DEFAULT_CAP = 24
INFINITE = math.inf


@dataclass(frozen=True)
class ToughnessCertificate:
    value: Fraction | float
    witness: tuple[int, ...]
    components: int

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITE


def count_components(masks, alive: int) -> int:
    """Number of components of the subgraph induced by the bitmask ``alive``."""
    count = 0
    while alive:
        low = alive & -alive
        comp = low
        frontier = low
        while frontier:
            reach = 0
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                reach |= masks[b.bit_length() - 1]
            frontier = reach & alive & ~comp
            comp |= frontier
        alive &= ~comp
        count += 1
    return count


def twin_classes(g: Graph) -> list[int]:
    """Vertex classes (as bitmasks) under N(u) - v == N(v) - u, by smallest member."""
    masks = g.masks
    by_closed: dict[int, int] = {}
    by_open: dict[int, int] = {}
    for v in range(g.n):
        by_closed[masks[v] | 1 << v] = by_closed.get(masks[v] | 1 << v, 0) | 1 << v
        by_open[masks[v]] = by_open.get(masks[v], 0) | 1 << v
    seen = 0
    classes = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        cls = by_closed[masks[v] | 1 << v]
        if cls == 1 << v:
            cls = by_open[masks[v]]
        classes.append(cls)
        seen |= cls
    return classes


def _unions_of_size(classes, sizes, s):
    suffix = [0] * (len(classes) + 1)
    for i in range(len(classes) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + sizes[i]

    def rec(i, left, acc):
        if left == 0:
            yield acc
            return
        if suffix[i] < left:
            return
        if sizes[i] <= left:
            yield from rec(i + 1, left - sizes[i], acc | classes[i])
        yield from rec(i + 1, left, acc)

    return rec(0, s, 0)


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def _check_cap(g: Graph, cap):
    if g.n == 0:
        raise EmptyGraphError("toughness of the empty graph is undefined")
    if cap is not None and g.n > cap:
        raise CapacityError(f"n = {g.n} exceeds the toughness enumeration cap {cap}")


def _search(g: Graph, accept, need_components, stop_size):
    """Shared size-ordered enumeration.

    ``need_components(s)`` gives the fewest components a size-s set must
    produce to matter; ``stop_size(s)`` ends the search; ``accept`` sees
    every useful candidate and returns True to stop early.
    """
    n = g.n
    masks = g.masks
    full = (1 << n) - 1
    classes = twin_classes(g)
    sizes = [c.bit_count() for c in classes]
    degs = sorted(g.degrees.tolist())
    prefix = [0]
    for d in degs:
        prefix.append(prefix[-1] + d)
    for s in range(1, n - 1):
        if stop_size(s):
            return
        c_need = need_components(s)
        if c_need > n - s:
            continue
        if prefix[c_need] > c_need * (s - 1) + n - s:
            continue
        for S in _unions_of_size(classes, sizes, s):
            c = count_components(masks, full & ~S)
            if c >= c_need and accept(S, s, c):
                return


def toughness(g: Graph, *, cap: int | None = DEFAULT_CAP) -> ToughnessCertificate:
    """Exact toughness min |S| / c(G - S) over cut sets S.

    Complete graphs are infinitely tough; disconnected graphs have
    toughness 0 with the empty witness.  Ties are broken towards the
    smallest |S|, then the lexicographically smallest sorted S.
    """
    _check_cap(g, cap)
    n = g.n
    masks = g.masks
    full = (1 << n) - 1
    c0 = count_components(masks, full)
    if c0 > 1:
        return ToughnessCertificate(Fraction(0), (), c0)
    if g.is_complete():
        return ToughnessCertificate(INFINITE, (), 1)

    best = {"ratio": INFINITE, "key": None, "c": 0}

    def offer(S, s, c):
        r = Fraction(s, c)
        key = (s, _bits(S))
        if r < best["ratio"] or (r == best["ratio"] and key < best["key"]):
            best.update(ratio=r, key=key, c=c)

    # seed with neighbourhoods so the pruning bites from the first size on
    for v in range(n):
        nb = masks[v]
        if nb | 1 << v != full:
            offer(nb, nb.bit_count(), count_components(masks, full & ~nb))

    def need(s):
        r = best["ratio"]
        return max(2, math.ceil(s / r)) if r != INFINITE else 2

    def stop(s):
        return Fraction(s, n - s) > best["ratio"]

    def accept(S, s, c):
        offer(S, s, c)
        return False

    _search(g, accept, need, stop)
    return ToughnessCertificate(best["ratio"], best["key"][1], best["c"])


def is_t_tough(g: Graph, t, *, cap: int | None = DEFAULT_CAP):
    """Decide |S| >= t * c(G - S) for every cut set S.

    Returns ``(True, None)`` or ``(False, S)`` with a violating cut set.
    ``t`` should be an int or Fraction; floats are converted exactly.
    """
    _check_cap(g, cap)
    t = Fraction(t)
    n = g.n
    full = (1 << n) - 1
    c0 = count_components(g.masks, full)
    if t <= 0:
        return True, None
    if c0 > 1:
        return False, ()
    found = []

    def need(s):
        # smallest c with s < t*c
        return max(2, math.floor(s / t) + 1)

    def stop(s):
        return Fraction(s, n - s) >= t

    def accept(S, s, c):
        if Fraction(s, c) < t:
            found.append(_bits(S))
            return True
        return False

    _search(g, accept, need, stop)
    if found:
        return False, found[0]
    return True, None
