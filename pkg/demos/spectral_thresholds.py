"""
Spectral thresholds for join graphs
===================================

Two join graphs on 20 vertices, their spectral radii, and how the
three-cell quotient matrix reproduces the radius of the whole graph.
"""
import numpy as np

from toughspec.families import one_tough_extremal, split_graph
from toughspec.partitions import coarsest_equitable, isolated_join_quotient, quotient
from toughspec.spectral import eig_max_small, eigen_report

# K_17 joined with three isolated vertices, against K_11 joined with K_8 + K_1
a = split_graph(17, [1, 1, 1])
b = split_graph(11, [8, 1])
for name, g in (("K17 \\/ 3K1", a), ("K11 \\/ (K8 u K1)", b)):
    rep = eigen_report(g)
    print(f"{name:18s} n={g.n} m={g.m} rho={rep.rho:.5f} lambda2={rep.lambda2:.5f}")

# the coarsest equitable partition collapses each clique block to one cell
pi = coarsest_equitable(a)
q = quotient(a, pi)
print("cells:", [len(c) for c in pi.cells])
print(q.entries)
print("quotient radius:", eig_max_small(q.entries))

# the threshold graph K_d \/ (K_{n-2d} u dK_1) as n grows
print("\n  n   d=2       d=3       d=4")
for n in range(10, 41, 5):
    row = []
    for d in (2, 3, 4):
        if n >= 2 * d + 1:
            row.append(eig_max_small(isolated_join_quotient(n, d)))
    print(f"{n:3d}  " + "  ".join(f"{r:8.4f}" for r in row))

# and the gap to n - 2, where dense graphs live
n = np.arange(10, 41, 5)
gap = [n_ - 2 - eig_max_small(isolated_join_quotient(int(n_), 2)) for n_ in n]
print("\nn - 2 - threshold (d=2):", np.round(gap, 4))
print("full-spectrum check at n=40:", eigen_report(one_tough_extremal(40, 2)).rho)
