"""Independent reference implementations, deliberately naive.

None of these share code with the package beyond reading ``g.adj``.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np


def _adjacency_lists(g):
    a = np.asarray(g.adj)
    return [set(np.flatnonzero(a[v]).tolist()) for v in range(a.shape[0])]


def count_components(nbrs, alive):
    parent = {v: v for v in alive}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in alive:
        for v in nbrs[u]:
            if v in parent:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
    return len({find(v) for v in alive})


def naive_toughness(g):
    """min |S| / c(G - S) over all 2^n subsets; inf for complete graphs."""
    n = g.n
    nbrs = _adjacency_lists(g)
    if count_components(nbrs, list(range(n))) > 1:
        return Fraction(0)
    best = math.inf
    for mask in range(1, 1 << n):
        s = [v for v in range(n) if mask >> v & 1]
        alive = [v for v in range(n) if not mask >> v & 1]
        if len(alive) < 2:
            continue
        c = count_components(nbrs, alive)
        if c > 1:
            best = min(best, Fraction(len(s), c))
    return best


def naive_is_t_tough(g, t):
    tau = naive_toughness(g)
    return tau == math.inf or tau >= t


def has_hamiltonian_cycle(g, required=()):
    """Held-Karp style DP over (visited set, endpoint), start vertex 0."""
    n = g.n
    if n < 3:
        return False
    a = np.asarray(g.adj)
    req = {frozenset(e) for e in required}
    if not req:
        reach = [[False] * n for _ in range(1 << n)]
        reach[1][0] = True
        for mask in range(1, 1 << n, 2):
            for v in range(n):
                if not reach[mask][v]:
                    continue
                for w in range(n):
                    if not mask >> w & 1 and a[v, w]:
                        reach[mask | 1 << w][w] = True
        full = (1 << n) - 1
        return any(reach[full][v] and a[v, 0] for v in range(1, n))
    # with required edges, brute force over permutations (small n only)
    for perm in itertools.permutations(range(1, n)):
        order = (0,) + perm
        if order[1] > order[-1]:
            continue
        edges = {frozenset((order[i], order[(i + 1) % n])) for i in range(n)}
        if all(a[u, v] for u, v in (tuple(e) for e in edges)) and req <= edges:
            return True
    return False


def has_hamiltonian_path(g, u, v):
    n = g.n
    a = np.asarray(g.adj)
    inner = [w for w in range(n) if w not in (u, v)]
    for perm in itertools.permutations(inner):
        order = (u,) + perm + (v,)
        if all(a[order[i], order[i + 1]] for i in range(n - 1)):
            return True
    return False


def exact_det(rows):
    """Determinant of a small matrix of Fractions by Laplace expansion."""
    k = len(rows)
    if k == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(k):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * exact_det(minor)
    return total


def exact_det_elimination(rows):
    """Determinant by Gaussian elimination over the rationals; for the
    larger matrices where Laplace expansion is too slow."""
    a = [list(map(Fraction, r)) for r in rows]
    k = len(a)
    det = Fraction(1)
    for c in range(k):
        piv = next((r for r in range(c, k) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, k):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def exact_charpoly_at(m, x):
    """det(xI - M) with M and x converted to exact rationals."""
    x = Fraction(x)
    rows = [[(x if i == j else 0) - Fraction(m[i][j]) for j in range(len(m))]
            for i in range(len(m))]
    return exact_det(rows) if len(rows) <= 6 else exact_det_elimination(rows)


def graph6_reference(g):
    """Encode graph6 straight from the format description, bit by bit."""
    n = g.n
    a = np.asarray(g.adj)
    bits = [int(a[i, j]) for j in range(n) for i in range(j)]
    while len(bits) % 6:
        bits.append(0)
    out = [n + 63]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = 2 * val + b
        out.append(val + 63)
    return bytes(out)
