import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subshifts.groups import FreeGroup, IntegerLattice
from subshifts.patterns import (
    Pattern, PatternCoding, coding_of, fits_inside, is_consistent, occurrences, realize, translate,
)

Z2 = IntegerLattice(2)
F2 = FreeGroup(2)


def lattice_pattern(max_cells=5, span=2, alphabet=3):
    cell = st.tuples(st.integers(-span, span), st.integers(-span, span))
    return st.dictionaries(cell, st.integers(0, alphabet - 1), max_size=max_cells).map(
        lambda m: Pattern.from_mapping(Z2, m)
    )


def test_consistency_examples():
    assert not is_consistent(PatternCoding(("x1 x2", "x2 x1"), (1, 2)), Z2)
    assert is_consistent(PatternCoding(("a b", "b a"), (1, 2)), F2)
    assert is_consistent(PatternCoding(("a",), (7,)), F2)


def test_realize_examples():
    assert realize(PatternCoding(("x1 x1-",), (3,)), Z2).as_dict() == {(0, 0): 3}
    assert realize(PatternCoding(("x1", "x2"), (1, 2)), Z2).as_dict() == {(1, 0): 1, (0, 1): 2}
    assert realize(PatternCoding(("x1 x2", "x2 x1"), (1, 1)), Z2).as_dict() == {(1, 1): 1}


def test_translate_examples():
    p = Pattern.from_mapping(Z2, {(0, 0): 1})
    assert translate(p, (1, 0)).support == ((1, 0),)
    assert translate(p, (0, 0)) == p


@settings(max_examples=80, deadline=None)
@given(lattice_pattern(), st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
       st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_translate_action_law(p, g, h):
    assert translate(p, Z2.mul(g, h)) == translate(translate(p, h), g)


@settings(max_examples=80, deadline=None)
@given(lattice_pattern())
def test_coding_round_trip(p):
    assert realize(coding_of(p), Z2) == p
    assert PatternCoding.from_dict(coding_of(p).to_dict()) == coding_of(p)


@settings(max_examples=80, deadline=None)
@given(st.dictionaries(st.lists(st.sampled_from(F2.generators), max_size=3).map(tuple), st.integers(0, 1),
                       max_size=5), st.randoms())
def test_consistency_ignores_order(mapping, rnd):
    items = list(mapping.items())
    c = PatternCoding(tuple(tuple(w) for w, _ in items), tuple(v for _, v in items))
    shuffled = list(items)
    rnd.shuffle(shuffled)
    d = PatternCoding(tuple(tuple(w) for w, _ in shuffled), tuple(v for _, v in shuffled))
    assert is_consistent(c, F2) == is_consistent(d, F2)


def test_fits_inside_examples():
    q = Pattern.from_mapping(Z2, {(0, 0): 0, (1, 0): 1, (2, 3): 2})
    assert fits_inside(Pattern.from_mapping(Z2, {(0, 0): 1}), q)
    assert fits_inside(q, q)
    assert not fits_inside(Pattern.from_mapping(Z2, {(0, 0): 5}), q)
    assert fits_inside(Pattern.from_mapping(Z2, {}), q)


def _fits_brute(p, q, radius):
    for g in Z2.ball(radius):
        t = translate(p, g)
        if all(c in q.as_dict() and q[c] == v for c, v in t.as_dict().items()):
            return True
    return False


@settings(max_examples=120, deadline=None)
@given(lattice_pattern(max_cells=2, span=1, alphabet=2), lattice_pattern(max_cells=6, span=2, alphabet=2))
def test_fits_inside_matches_exhaustive(p, q):
    if not p.cells:
        assert fits_inside(p, q)
        return
    assert fits_inside(p, q) == _fits_brute(p, q, 6)
    for g in occurrences(p, q):
        t = translate(p, g).as_dict()
        assert all(q[c] == v for c, v in t.items())


def test_pattern_requires_known_elements():
    with pytest.raises(ValueError):
        Pattern.from_mapping(Z2, {(0,): 1})
