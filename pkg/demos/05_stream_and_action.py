"""A growing Hamiltonian 3-path on Cay(Z^2) and the Z-action it induces."""
from subshifts.graphs import CayleyGraph, OneEnd
from subshifts.groups import IntegerLattice
from subshifts.threepath import PathGenerator, TranslationAction, jump_lengths

G = CayleyGraph(IntegerLattice(2))
gen = PathGenerator(G, None, OneEnd())
path = gen.run(len(G.group.ball(3)))
print(f"after {gen.processed} targets: {len(path)} vertices, indices {path.start}..{path.end}")
print("max jump:", max(jump_lengths(G, path.vertices)))

act = TranslationAction(gen).act
v = (0, 0)
print("orbit of the origin, n = -5..5:")
print("  " + " ".join(str(act(v, n)) for n in range(-5, 6)))
print("v * 3 * 4 == v * 7:", act(act(v, 3), 4) == act(v, 7))
