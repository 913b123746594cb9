import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subshifts.errors import InvalidGroup, UnknownGenerator
from subshifts.groups import (
    DirectProduct, FiniteGroup, FreeGroup, IntegerLattice, cyclic_group, format_word,
    group_from_dict, parse_word, reduced_words,
)

Z = IntegerLattice(1)
Z2 = IntegerLattice(2)
F2 = FreeGroup(2)
C3 = cyclic_group(3)


def _s3():
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms]
    return FiniteGroup(table, {"r": idx[(1, 2, 0)], "t": idx[(1, 0, 2)]})


S3 = _s3()
GROUPS = [Z, Z2, IntegerLattice(3), F2, FreeGroup(3), C3, S3, DirectProduct(Z, C3), DirectProduct(F2, Z)]


def words(group, max_size=8):
    return st.lists(st.sampled_from(group.generators), max_size=max_size).map(tuple)


def test_evaluate_examples():
    assert Z2.evaluate("x1 x2 x1⁻¹") == (0, 1)
    assert Z2.evaluate("x1 x1 x2 x1-") == (1, 1)
    assert F2.evaluate("a b b- a-") == F2.identity()
    assert C3.evaluate("g g g") == C3.identity()


def test_word_problem_examples():
    assert Z2.word_problem("x1 x2 x1- x2-")
    assert not F2.word_problem("a b a- b-")
    assert not Z.word_problem("x1 x1 x1-")


def test_parse_and_format():
    assert parse_word("") == ()
    assert parse_word("ε") == ()
    assert parse_word("a b⁻¹") == ("a", "b-")
    assert format_word(("a", "b-")) == "a b-"


def test_unknown_generator():
    with pytest.raises(UnknownGenerator):
        Z2.evaluate("y")
    with pytest.raises(InvalidGroup):
        group_from_dict({"kind": "braid"})


def test_ball_sizes():
    assert len(Z2.ball(1)) == 5
    assert len(F2.ball(2)) == 17
    for G in GROUPS:
        assert list(G.ball(0)) == [G.identity()]
    assert len(C3.ball(5)) == 3
    assert len(S3.ball(5)) == 6


def _lattice_ball_count(d, n):
    return sum(1 for v in itertools.product(range(-n, n + 1), repeat=d) if sum(map(abs, v)) <= n)


@pytest.mark.parametrize("d,n", [(1, 4), (2, 5), (3, 3)])
def test_lattice_ball_matches_l1_count(d, n):
    assert len(IntegerLattice(d).ball(n)) == _lattice_ball_count(d, n)


def test_free_ball_matches_reduced_words():
    for n in range(4):
        ball = set(F2.ball(n))
        brute = {F2.evaluate(w) for w in reduced_words(F2, n)} | {F2.identity()}
        assert ball == brute
        assert len(ball) == 1 + sum(4 * 3 ** (k - 1) for k in range(1, n + 1))


@pytest.mark.parametrize("G", GROUPS, ids=repr)
def test_balls_nested_and_numbering_prefix(G):
    prev = set()
    for n in range(4):
        b = G.ball(n)
        assert prev <= set(b)
        assert len(prev) <= len(b)
        assert {G.element_at(i) for i in range(len(b))} == set(b)
        prev = set(b)


def test_numbering_over_z():
    assert [Z.element_at(i) for i in range(5)] == [(0,), (-1,), (1,), (-2,), (2,)]
    assert Z2.element_at(0) == (0, 0)
    for k in range(1001):
        assert Z.index_of(Z.element_at(k)) == k


@pytest.mark.parametrize("G", GROUPS, ids=repr)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_evaluate_is_morphism(G, data):
    u = data.draw(words(G))
    v = data.draw(words(G))
    assert G.evaluate(u + v) == G.mul(G.evaluate(u), G.evaluate(v))
    assert G.evaluate(G.inverse_word(u)) == G.inv(G.evaluate(u))


@pytest.mark.parametrize("G", GROUPS, ids=repr)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_word_of_is_geodesic(G, data):
    g = G.evaluate(data.draw(words(G)))
    w = G.word_of(g)
    assert G.evaluate(w) == g
    assert len(w) == G.length(g)


@pytest.mark.parametrize("G", GROUPS, ids=repr)
def test_json_round_trip(G):
    assert group_from_dict(G.to_dict()) == G
    for g in G.ball(2):
        assert G.element_from_json(G.element_to_json(g)) == g


def test_finite_group_rejects_bad_table():
    with pytest.raises(InvalidGroup):
        FiniteGroup([[0, 1], [1, 1]])


def test_product_generators_are_prefixed():
    P = DirectProduct(Z, C3)
    assert P.evaluate("L.x1 R.g R.g") == ((1,), 2)
