"""Emptiness certificates on Z^2 and what the search returns when there is none."""
from subshifts.groups import IntegerLattice
from subshifts.patterns import PatternCoding
from subshifts.sft import SftPresentation, check_empty

Z2 = IntegerLattice(2)


def two_cell(word, a, b):
    return PatternCoding(((), word), (a, b))


# Equal horizontal and vertical neighbours forbidden: only the two checkerboards survive.
# Also forbidding unequal diagonals leaves them untouched, since checkerboard diagonals agree.
rules = [two_cell((s,), a, a) for s in ("x1", "x2") for a in (0, 1)]
literal = rules + [two_cell(d, a, 1 - a) for d in (("x1", "x2"), ("x1", "x2-")) for a in (0, 1)]
print("unequal diagonals forbidden:", check_empty(SftPresentation(Z2, (0, 1), tuple(literal))).describe())

# Forbidding equal diagonals instead contradicts the checkerboard at once.
corrected = rules + [two_cell(("x1", "x2"), a, a) for a in (0, 1)]
print("equal diagonals forbidden:  ", check_empty(SftPresentation(Z2, (0, 1), tuple(corrected))).describe())

# A single forbidden symbol per cell: empty at radius 0.
trivial = SftPresentation(Z2, (0, 1), (PatternCoding(((),), (0,)), PatternCoding(((),), (1,))))
print("every symbol forbidden:     ", check_empty(trivial).describe())
