import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subshifts.errors import UnknownVertex
from subshifts.graphs import (
    CayleyGraph, ExceedsBudget, Finite, FiniteGraph, HasFiniteComponent, NoFiniteComponent,
    NoPromise, OneEnd, SubGraph, TwoEnds, UnknownConnectivity, ball_subgraph, bfs_ball, boundary,
    connectivity_after_removal, end_count_estimate, finite_component, graph_from_dict,
)
from subshifts.groups import FreeGroup, IntegerLattice, cyclic_group

Z = CayleyGraph(IntegerLattice(1))
Z2 = CayleyGraph(IntegerLattice(2))
F2 = CayleyGraph(FreeGroup(2))
O = (0, 0)


def test_neighbors_examples():
    assert sorted(Z2.neighbors(O)) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert sorted(Z.neighbors((0,))) == [(-1,), (1,)]
    P = FiniteGraph("abc", [("a", "b"), ("b", "c")])
    assert sorted(P.neighbors("b")) == ["a", "c"]
    with pytest.raises(UnknownVertex):
        P.neighbors("z")


def test_ball_examples():
    B = ball_subgraph(Z2, O, 1)
    assert len(B) == 5 and len(B.edges) == 4
    B = ball_subgraph(Z2, O, 0)
    assert len(B) == 1 and len(B.edges) == 0
    B = ball_subgraph(F2, (), 2)
    assert len(B) == 17 and len(B.edges) == 16
    assert B.is_connected()


@settings(max_examples=60, deadline=None)
@given(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_adjacency_matches_word_metric(g, h):
    assert Z2.adjacent(g, h) == (Z2.group.distance(g, h) == 1)
    assert Z2.distance(g, h) == abs(g[0] - h[0]) + abs(g[1] - h[1])


def test_finite_component_examples():
    assert finite_component(Z, (0,), [(-1,), (1,)]) == Finite(frozenset({(0,)}))
    assert finite_component(Z2, O, Z2.neighbors(O)) == Finite(frozenset({O}))
    assert isinstance(finite_component(Z2, O, (), budget=100), ExceedsBudget)


@settings(max_examples=40, deadline=None)
@given(st.sets(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), max_size=20), st.randoms())
def test_finite_component_is_closed(removed, rnd):
    removed.discard(O)
    res = finite_component(Z2, O, removed, budget=500)
    if isinstance(res, Finite):
        for v in res.component:
            assert all(w in res.component or w in removed for w in Z2.neighbors(v))


def _oracle_finite_components(removed, radius=8):
    """Components of B_radius - removed that never reach the sphere of radius ``radius``."""
    ball = bfs_ball(Z2, O, radius)
    H = nx.Graph()
    for v in ball:
        if v in removed:
            continue
        H.add_node(v)
        for w in Z2.neighbors(v):
            if w in ball and w not in removed:
                H.add_edge(v, w)
    return [c for c in nx.connected_components(H) if all(ball[v] < radius for v in c)]


def _random_three_path(rng, length):
    path = [O]
    while len(path) < length:
        x = path[-1]
        options = [v for v in bfs_ball(Z2, x, 3) if v not in path]
        path.append(rng.choice(sorted(options)))
    return path


def test_connectivity_after_short_three_paths_matches_ball_oracle():
    rng = random.Random(3)
    for _ in range(150):
        path = _random_three_path(rng, rng.randint(1, 6))
        verdict = connectivity_after_removal(Z2, path, OneEnd())
        oracle = _oracle_finite_components(set(path))
        if oracle:
            assert isinstance(verdict, HasFiniteComponent)
            assert verdict.component in {frozenset(c) for c in oracle}
        else:
            assert isinstance(verdict, NoFiniteComponent) and verdict.certified


def test_short_three_path_can_enclose_a_vertex():
    path = [O, (1, 1), (2, 0), (1, -1)]
    assert _oracle_finite_components(set(path)) == [{(1, 0)}]
    assert connectivity_after_removal(Z2, path, OneEnd()) == HasFiniteComponent(frozenset({(1, 0)}))


def test_connectivity_examples():
    v = connectivity_after_removal(Z2, [O], OneEnd())
    assert isinstance(v, NoFiniteComponent)
    v = connectivity_after_removal(Z, [(0,)], TwoEnds(((0,),)))
    assert isinstance(v, NoFiniteComponent)
    assert sorted(v.classes) == [((-1,),), ((1,),)]
    v = connectivity_after_removal(Z, [(-1,), (1,)], TwoEnds(((0,),)))
    assert v == HasFiniteComponent(frozenset({(0,)}))


def test_promise_mismatch_is_unknown_not_wrong():
    # Z has two ends; promising one end leaves two classes open forever
    v = connectivity_after_removal(Z, [(0,)], OneEnd(), budget=200)
    assert isinstance(v, UnknownConnectivity)
    v = connectivity_after_removal(Z, [(0,)], NoPromise(), budget=200)
    assert isinstance(v, NoFiniteComponent) and not v.certified


def test_finite_graph_connectivity():
    P = FiniteGraph(range(4), [(0, 1), (1, 2), (2, 3)])
    assert connectivity_after_removal(P, [1]) == HasFiniteComponent(frozenset({0}))
    C = cyclic_group(5)
    assert isinstance(connectivity_after_removal(CayleyGraph(C), [0]), HasFiniteComponent)


@pytest.mark.parametrize("seed", range(10))
def test_finite_components_match_networkx(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 9)
    G = nx.gnp_random_graph(n, 0.3, seed=seed)
    F = FiniteGraph(range(n), G.edges)
    removed = set(rng.sample(range(n), rng.randint(0, n - 1)))
    H = G.subgraph(set(range(n)) - removed)
    assert sorted(map(sorted, F.components(removed))) == sorted(map(sorted, nx.connected_components(H)))


def test_end_count_examples():
    assert end_count_estimate(Z, 1, 6) == 2
    assert end_count_estimate(Z2, 2, 8) == 1
    assert end_count_estimate(F2, 1, 5) == 4


def test_subgraph_hides_removed_vertices():
    S = SubGraph(Z2, [(1, 0)])
    assert (1, 0) not in S.neighbors(O)
    with pytest.raises(UnknownVertex):
        S.neighbors((1, 0))


def test_boundary_and_round_trip():
    assert boundary(Z2, [O]) == Z2.sorted_vertices(Z2.neighbors(O))
    P = FiniteGraph(range(3), [(0, 1), (1, 2)])
    Q = graph_from_dict(P.to_dict())
    assert sorted(Q.edges) == sorted(P.edges)
    assert graph_from_dict(Z2.to_dict()).group == Z2.group
