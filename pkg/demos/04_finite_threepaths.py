"""Hamiltonian paths in the cube of small finite graphs, between any two endpoints."""
import networkx as nx

from subshifts.graphs import FiniteGraph
from subshifts.threepath import finite_hamiltonian, jump_lengths, path_violations

for name, g in (("star K_1,5", nx.star_graph(5)), ("Petersen", nx.petersen_graph()), ("binary tree", nx.balanced_tree(2, 3))):
    G = FiniteGraph(g.nodes, g.edges)
    u, v = list(g.nodes)[1], list(g.nodes)[-1]
    path = finite_hamiltonian(G, u, v)
    checks = path_violations(G, path, hamiltonian_on=g.nodes, endpoints=(u, v), strict_ends=True)
    print(f"{name}: {list(path.vertices)}")
    print(f"  jumps {jump_lengths(G, path.vertices)}  violations {checks or 'none'}")
