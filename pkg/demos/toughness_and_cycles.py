"""
Toughness, Hamiltonian cycles and the exceptional graphs
========================================================

Exact toughness with witness cut sets, then the graphs that sit on the
boundary of the spectral conditions.
"""
from toughspec.families import isolated_pair_join, m_graph, t_tough_extremal
from toughspec.graph import complete_bipartite, cycle, petersen, star
from toughspec.hamilton import hamiltonian_cycle, hamiltonian_path, is_hamiltonian_connected
from toughspec.toughness import toughness

for name, g in (("star K_{1,3}", star(3)), ("cycle C_6", cycle(6)),
                ("K_{2,5}", complete_bipartite(2, 5)), ("Petersen", petersen())):
    cert = toughness(g)
    print(f"{name:12s} t={str(cert.value):5s} witness={cert.witness} "
          f"components={cert.components}")

# M_n: 1-tough, minimum degree 2, no Hamiltonian cycle
for n in (8, 12, 18):
    g = m_graph(n)
    print(f"M_{n}: t={toughness(g, cap=None).value} min degree={g.min_degree} "
          f"cycle={hamiltonian_cycle(g)}")

# the t-tough extremal graph is broken by its join block
g = t_tough_extremal(30, 2)
cert = toughness(g, cap=None)
print(f"\nK3 \\/ (K26 u K1): t={cert.value} witness={cert.witness}")

# dense, minimum degree 3, yet two join vertices have no spanning path between them
g = isolated_pair_join(13)
print(f"\nK3 \\/ (K8 u 2K1): n={g.n} m={g.m} hamiltonian-connected={is_hamiltonian_connected(g)}")
print("path 0 -> 1:", hamiltonian_path(g, 0, 1))
print("path 0 -> 12:", hamiltonian_path(g, 0, 12).vertices)
