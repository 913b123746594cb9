"""Arrow fields encoding a Z-action on Z^2, overlaid with golden-mean rows."""
from subshifts.bounded_actions import HPresentation, build_T, build_TX, overlay_window, validate_window
from subshifts.groups import IntegerLattice
from subshifts.patterns import PatternCoding
from subshifts.sft import SftPresentation

Z, Z2 = IntegerLattice(1), IntegerLattice(2)
golden = SftPresentation(Z, (0, 1), (PatternCoding(((), ("x1",)), (1, 1)),))
T = build_T(Z2, HPresentation.from_group(Z), ((1, 0), (-1, 0), (0, 1), (0, -1)))
TX = build_TX(T, golden)
print(f"T: {len(T.alphabet)} symbols, {len(T.forbidden)} forbidden codings")
print(f"T[X]: {len(TX.alphabet)} symbols, {len(TX.forbidden)} forbidden codings")

east = {"x1": (1, 0), "x1-": (-1, 0)}
cells = list(Z2.ball(3))
rows = {c: int(c[0] % 2 == 0) for c in cells}
print("alternating rows valid:", validate_window(TX, overlay_window(TX, cells, lambda c: east, rows.__getitem__)))
rows[(1, 0)] = 1
print("with 11 in a row valid:", validate_window(TX, overlay_window(TX, cells, lambda c: east, rows.__getitem__)))
