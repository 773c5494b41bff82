"""Equitable partitions and quotient matrices.

Also carries two closed-form 3x3 quotients (and their characteristic
polynomials, transcribed coefficient by coefficient) for the split graphs
K_s \\/ (K_{n-2s} u sK_1) and K_s \\/ (K_{n-s-(d-s+1)s} u sK_{d+1-s}).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ParameterError, PartitionError
from .graph import Graph


@dataclass(frozen=True)
class Partition:
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(tuple(sorted(c)) for c in self.cells))

    def __len__(self):
        return len(self.cells)

    def validate(self, n: int):
        seen = set()
        for cell in self.cells:
            if not cell:
                raise PartitionError("partition has an empty cell")
            for v in cell:
                if not 0 <= v < n:
                    raise PartitionError(f"vertex {v} out of range for n={n}")
                if v in seen:
                    raise PartitionError(f"vertex {v} appears in two cells")
                seen.add(v)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise PartitionError(f"partition misses vertices {missing}")


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    @property
    def order(self) -> int:
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries], dtype=float)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)


def quotient(g: Graph, pi: Partition) -> QuotientMatrix:
    """Quotient of A(g): entry (i, j) is the mean number of cell-j
    neighbours over the vertices of cell i.  Exact rational arithmetic."""
    pi.validate(g.n)
    a = g.adj.astype(np.int64)
    rows = []
    equitable = True
    for ci in pi.cells:
        row = []
        for cj in pi.cells:
            counts = a[np.ix_(ci, cj)].sum(axis=1)
            row.append(Fraction(int(counts.sum()), len(ci)))
            if counts.min() != counts.max():
                equitable = False
        rows.append(tuple(row))
    return QuotientMatrix(tuple(rows), equitable)


def coarsest_equitable(g: Graph) -> Partition:
    """Coarsest equitable partition, by iterated neighbour-count refinement.

    Cells are ordered by their smallest vertex.
    """
    n = g.n
    if n == 0:
        raise PartitionError("graph has no vertices")
    a = g.adj
    color = [0] * n
    ncolors = 1
    while True:
        sig = []
        for v in range(n):
            counts = [0] * ncolors
            for u in np.flatnonzero(a[v]).tolist():
                counts[color[u]] += 1
            sig.append((color[v], tuple(counts)))
        # relabel by first occurrence so cell order follows smallest vertex
        relabel: dict = {}
        new = [relabel.setdefault(s, len(relabel)) for s in sig]
        if len(relabel) == ncolors:
            break
        color, ncolors = new, len(relabel)
    cells = [[] for _ in range(ncolors)]
    for v, c in enumerate(color):
        cells[c].append(v)
    return Partition(tuple(tuple(c) for c in cells))


# -- closed forms ------------------------------------------------------------

def isolated_join_quotient(n: int, s: int) -> np.ndarray:
    """Quotient of K_s \\/ (K_{n-2s} u sK_1) over (join, isolated, clique)."""
    if s < 1 or n < 2 * s + 1:
        raise ParameterError(f"need s >= 1 and n >= 2s + 1; got n={n}, s={s}")
    return np.array([[s - 1, s, n - 2 * s],
                     [s, 0, 0],
                     [s, 0, n - 2 * s - 1]], dtype=float)


def isolated_join_charpoly(n: int, s: int, x: float) -> float:
    if s < 1 or n < 2 * s + 1:
        raise ParameterError(f"need s >= 1 and n >= 2s + 1; got n={n}, s={s}")
    return x ** 3 - (n - s - 2) * x ** 2 - (s * s + n - s - 1) * x + s * s * n - 2 * s ** 3 - s * s


def _check_clique_join(n: int, s: int, delta: int):
    if s < 1 or s >= delta:
        raise ParameterError(f"need 1 <= s < delta; got s={s}, delta={delta}")
    if n - s - (delta - s + 1) * s < 1:
        raise ParameterError(f"need n - s - (delta-s+1)*s >= 1; got n={n}")


def clique_join_quotient(n: int, s: int, delta: int) -> np.ndarray:
    """Quotient of K_s \\/ (K_{n-s-(d-s+1)s} u sK_{d-s+1}) over
    (join, big clique, small cliques)."""
    _check_clique_join(n, s, delta)
    big = n - s - (delta - s + 1) * s
    small = (delta - s + 1) * s
    return np.array([[s - 1, big, small],
                     [s, big - 1, 0],
                     [s, 0, delta - s]], dtype=float)


def clique_join_charpoly(n: int, s: int, delta: int, x: float) -> float:
    _check_clique_join(n, s, delta)
    d = delta
    a2 = -d * s + s * s + d + n - 2 * s - 2
    a1 = d * d * s - d * s * s - d * n + n * s + s * s + 2 * d + n - 3 * s - 1
    a0 = (-s * (s * (d - s) * (d * s - s * s - n + 3 * s) + d * d - s * d - n * s)
          - 2 * s ** 3 + (n - s) * d - n * s - d + s)
    return x ** 3 - a2 * x ** 2 - a1 * x + a0


def partition_from_blocks(sizes: Sequence[int]) -> Partition:
    """Consecutive-label partition with the given cell sizes."""
    cells, off = [], 0
    for k in sizes:
        cells.append(tuple(range(off, off + k)))
        off += k
    return Partition(tuple(cells))
