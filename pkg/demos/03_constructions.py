"""Products, disjoint unions and the reduction that turns emptiness into a fixed-point count."""
from subshifts.groups import IntegerLattice
from subshifts.patterns import PatternCoding
from subshifts.sft import (
    SftPresentation, disjoint_union, fixed_points, locally_admissible, product, rice_reduction, unpair,
)

Z = IntegerLattice(1)
golden = SftPresentation(Z, (0, 1), (PatternCoding(((), ("x1",)), (1, 1)),))
full = SftPresentation(Z, (0, 1), ())

P = product(golden, full)
print("product alphabet:", P.alphabet, "->", [unpair(s) for s in P.alphabet])
print("|Loc_1(golden)| x |Loc_1(full)| =", len(locally_admissible(golden, 1)), "x", len(locally_admissible(full, 1)),
      "=", len(locally_admissible(P, 1)))

U = disjoint_union(golden, full)
print("union alphabet (even = left, odd = right):", U.alphabet)
print("|Loc_1(union)| =", len(locally_admissible(U, 1)))

one_point = SftPresentation(Z, (0, 1), (PatternCoding(((),), (1,)),))
empty = SftPresentation(Z, (0,), (PatternCoding(((),), (0,)),))
for name, inp in (("empty input", empty), ("golden input", golden), ("full input", full)):
    R = rice_reduction(one_point, full, inp)
    print(f"{name:13s} -> {len(fixed_points(R))} fixed points")
