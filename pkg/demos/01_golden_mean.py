"""Golden-mean shift on Z: exact language, entropy, box bounds and distances."""
import math

from subshifts.groups import IntegerLattice
from subshifts.patterns import PatternCoding
from subshifts.sft import SftPresentation, entropy_upper_bound, subshift_distance, z_decide

Z = IntegerLattice(1)
golden = SftPresentation(Z, (0, 1), (PatternCoding(((), ("x1",)), (1, 1)),))
full = SftPresentation(Z, (0, 1), ())

dec = z_decide(golden)
print("empty:", dec.empty)
print("entropy:", dec.entropy, "vs log(phi) =", math.log((1 + 5 ** 0.5) / 2))
for n in range(3):
    print(f"|L_{n}| =", len(dec.language(n)))

print("\nbox upper bounds log|X_[0,n)| / n decrease towards the entropy:")
for n in (2, 4, 8, 12, 16):
    print(f"  n={n:2d}  {entropy_upper_bound(golden, n):.6f}")

print("\nD(golden, golden) =", subshift_distance(golden, golden))
print("D(golden, full)   =", subshift_distance(golden, full))
