"""Highly computable graphs and the connectivity primitives used by 3-paths.

A graph exposes ``neighbors`` (with multiplicity; a loop lists its vertex
twice), ``degree``, a numbering of vertices via ``vertex_key`` and
``vertices()``, and a graph distance.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .errors import ResourceLimit, UnknownVertex
from .groups import BALL_CAP, Group

DEFAULT_VERTEX_BUDGET = 10**5


class Graph:
    finite = False

    def neighbors(self, v) -> list:
        raise NotImplementedError

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def adjacent(self, u, v) -> bool:
        return v in self.neighbors(u)

    def vertex_key(self, v):
        raise NotImplementedError

    def vertices(self):
        """All vertices in numbering order (possibly infinite)."""
        raise NotImplementedError

    def check_vertex(self, v):
        raise NotImplementedError

    def format_vertex(self, v) -> str:
        return str(v)

    def vertex_to_json(self, v):
        return v

    def default_center(self):
        return next(iter(self.vertices()))

    def distance(self, u, v, limit: int | None = None) -> int | None:
        """Graph distance by BFS; None when farther than ``limit``."""
        if u == v:
            return 0
        seen = {u}
        frontier = [u]
        d = 0
        while frontier and (limit is None or d < limit):
            d += 1
            nxt = []
            for x in frontier:
                for y in self.neighbors(x):
                    if y == v:
                        return d
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return None

    def sorted_vertices(self, vs) -> list:
        return sorted(set(vs), key=self.vertex_key)


class CayleyGraph(Graph):
    """Cayley graph for the standard generating set: g ~ g*s."""

    def __init__(self, group: Group):
        self.group = group
        self._steps = group.generator_elements()
        self.finite = group.kind == "finite"

    def neighbors(self, v):
        self.check_vertex(v)
        return [self.group.mul(v, s) for s in self._steps]

    def degree(self, v):
        self.check_vertex(v)
        return len(self._steps)

    def adjacent(self, u, v):
        return self.group.mul(self.group.inv(u), v) in self._steps

    def vertex_key(self, v):
        return self.group.order_key(v)

    def vertices(self):
        return self.group.enumerate()

    def check_vertex(self, v):
        if not self.group.is_element(v):
            raise UnknownVertex(v)

    def distance(self, u, v, limit=None):
        d = self.group.distance(u, v)
        return None if limit is not None and d > limit else d

    def format_vertex(self, v):
        return self.group.format_element(v)

    def vertex_to_json(self, v):
        return self.group.element_to_json(v)

    def default_center(self):
        return self.group.identity()

    def to_dict(self):
        return {"kind": "cayley", "group": self.group.to_dict()}


class FiniteGraph(Graph):
    """A finite multigraph. Vertices keep the order they are given in."""

    finite = True

    def __init__(self, vertices, edges=()):
        self._vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self._vertices)}
        if len(self._index) != len(self._vertices):
            raise ValueError("duplicate vertices")
        self._adj = {v: [] for v in self._vertices}
        self.edges = []
        for u, v in edges:
            if u not in self._index:
                raise UnknownVertex(u)
            if v not in self._index:
                raise UnknownVertex(v)
            self.edges.append((u, v))
            self._adj[u].append(v)
            self._adj[v].append(u)
        for v in self._vertices:
            self._adj[v].sort(key=self._index.__getitem__)

    def neighbors(self, v):
        self.check_vertex(v)
        return list(self._adj[v])

    def vertex_key(self, v):
        return self._index[v]

    def vertices(self):
        return iter(self._vertices)

    def check_vertex(self, v):
        if v not in self._index:
            raise UnknownVertex(v)

    def __len__(self):
        return len(self._vertices)

    @property
    def vertex_list(self) -> tuple:
        return self._vertices

    def induced(self, keep) -> "FiniteGraph":
        keep = set(keep)
        vs = [v for v in self._vertices if v in keep]
        es = [(u, v) for u, v in self.edges if u in keep and v in keep]
        return FiniteGraph(vs, es)

    def components(self, removed=()) -> list:
        """Connected components of the graph minus ``removed``, in numbering order."""
        removed = set(removed)
        seen, out = set(), []
        for s in self._vertices:
            if s in removed or s in seen:
                continue
            comp = []
            seen.add(s)
            queue = deque([s])
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in self._adj[x]:
                    if y not in seen and y not in removed:
                        seen.add(y)
                        queue.append(y)
            out.append(self.sorted_vertices(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def to_dict(self):
        index = {v: i for i, v in enumerate(self._vertices)}
        return {
            "kind": "finite",
            "vertices": len(self._vertices),
            "edges": [[index[u], index[v]] for u, v in self.edges],
        }


def graph_from_dict(spec: dict) -> Graph:
    from .groups import group_from_dict

    kind = spec.get("kind")
    if kind == "cayley":
        return CayleyGraph(group_from_dict(spec["group"]))
    if kind == "finite":
        n = int(spec["vertices"])
        return FiniteGraph(range(n), [tuple(e) for e in spec.get("edges", [])])
    raise ValueError(f"unknown graph kind {kind!r}")


def bfs_ball(G: Graph, center, r: int, cap: int = BALL_CAP) -> dict:
    """Vertex -> distance for all vertices within distance r of center."""
    G.check_vertex(center)
    dist = {center: 0}
    frontier = [center]
    for d in range(1, r + 1):
        nxt = []
        for x in frontier:
            for y in G.neighbors(x):
                if y not in dist:
                    dist[y] = d
                    nxt.append(y)
                    if len(dist) > cap:
                        raise ResourceLimit(f"ball exceeds {cap} vertices")
        frontier = nxt
    return dist


def _induced_edges(G: Graph, vs) -> list:
    keep = set(vs)
    edges = []
    for u in vs:
        counts = Counter(G.neighbors(u))
        ku = G.vertex_key(u)
        for v, c in counts.items():
            if v not in keep:
                continue
            if v == u:
                edges.extend([(u, u)] * (c // 2))
            elif ku < G.vertex_key(v):
                edges.extend([(u, v)] * c)
    return edges


def ball_subgraph(G: Graph, center, r: int, cap: int = BALL_CAP) -> FiniteGraph:
    """Induced subgraph on the vertices within distance r of center."""
    vs = G.sorted_vertices(bfs_ball(G, center, r, cap))
    return FiniteGraph(vs, _induced_edges(G, vs))


@dataclass(frozen=True)
class Finite:
    component: frozenset


@dataclass(frozen=True)
class ExceedsBudget:
    explored: int


def finite_component(G: Graph, seed, removed=(), budget: int = DEFAULT_VERTEX_BUDGET):
    """BFS of G - removed from seed; Finite(C) if it closes within budget vertices."""
    G.check_vertex(seed)
    removed = set(removed)
    if seed in removed:
        raise ValueError("seed lies in the removed set")
    seen = {seed}
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for y in G.neighbors(x):
            if y not in seen and y not in removed:
                seen.add(y)
                if len(seen) > budget:
                    return ExceedsBudget(len(seen))
                queue.append(y)
    return Finite(frozenset(seen))


# end promises


@dataclass(frozen=True)
class OneEnd:
    """Caller asserts the graph has exactly one end."""


@dataclass(frozen=True)
class TwoEnds:
    """Caller asserts that removing ``seed`` leaves exactly two infinite components."""

    seed: tuple


@dataclass(frozen=True)
class NoPromise:
    """No end information. Classes still open at the budget are reported as
    presumed infinite, without a certificate."""


# connectivity verdicts


@dataclass(frozen=True)
class NoFiniteComponent:
    classes: tuple
    certified: bool = True


@dataclass(frozen=True)
class HasFiniteComponent:
    component: frozenset


@dataclass(frozen=True)
class UnknownConnectivity:
    reason: str
    classes: tuple = ()


def boundary(G: Graph, removed) -> list:
    removed = set(removed)
    out = set()
    for v in removed:
        for y in G.neighbors(v):
            if y not in removed:
                out.add(y)
    return G.sorted_vertices(out)


@dataclass
class Census:
    """Outcome of a dovetailed component search around a removed set.

    ``finite`` lists components that closed (each is finite). ``classes``
    lists the still-open classes, each as the sorted seed vertices known to
    share a component; ``class_of`` maps every seed to its open class index.
    """

    finite: list
    classes: tuple
    class_of: dict
    exhausted: bool

    def finite_vertices(self) -> set:
        out = set()
        for c in self.finite:
            out |= c
        return out


def component_census(
    G: Graph,
    removed,
    extra=(),
    max_open: int = 1,
    budget: int = DEFAULT_VERTEX_BUDGET,
    stop_at_finite: bool = False,
) -> Census:
    """Dovetailed BFS in G - removed from the boundary of ``removed`` and from ``extra``.

    Every seed starts its own class. Each round grows every open class by
    one BFS layer, in seed numbering order; classes that touch are merged and
    a class whose frontier empties is a finite component. The search stops
    once at most ``max_open`` classes are open, or when more than ``budget``
    vertices have been explored.
    """
    removed = set(removed)
    starts = G.sorted_vertices(set(boundary(G, removed)) | {v for v in extra if v not in removed})
    parent = list(range(len(starts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner = {v: i for i, v in enumerate(starts)}
    members = {i: {v} for i, v in enumerate(starts)}
    frontier = {i: [v] for i, v in enumerate(starts)}
    seeds = {i: [v] for i, v in enumerate(starts)}
    finite = []
    total = len(starts)
    exhausted = False

    while len(frontier) > max_open and not exhausted:
        for i in sorted(frontier):
            if i not in frontier:
                continue
            nxt = []
            for x in frontier[i]:
                for y in G.neighbors(x):
                    if y in removed:
                        continue
                    j = owner.get(y)
                    if j is None:
                        owner[y] = i
                        members[i].add(y)
                        nxt.append(y)
                        total += 1
                        continue
                    j = find(j)
                    if j != i:
                        parent[j] = i
                        members[i] |= members.pop(j)
                        seeds[i] += seeds.pop(j)
                        nxt.extend(frontier.pop(j))
            if not nxt:
                del frontier[i]
                finite.append(frozenset(members.pop(i)))
                seeds.pop(i)
                if stop_at_finite:
                    break
            else:
                frontier[i] = nxt
            if total > budget:
                exhausted = True
                break
        if stop_at_finite and finite:
            break
    order = sorted(frontier, key=lambda i: min(G.vertex_key(v) for v in seeds[i]))
    classes = tuple(tuple(G.sorted_vertices(seeds[i])) for i in order)
    class_of = {v: k for k, cls in enumerate(classes) for v in cls}
    return Census(finite, classes, class_of, exhausted)


def open_allowance(G: Graph, promise, removed) -> int:
    """How many open classes may remain once every finite component has closed."""
    if G.finite:
        return 0
    removed = set(removed)
    while isinstance(G, SubGraph):
        removed |= G.removed
        G = G.parent
    if isinstance(promise, TwoEnds) and promise.seed and set(promise.seed) <= removed:
        return 2
    return 1


def certified_census(G: Graph, removed, promise, extra=(), budget=DEFAULT_VERTEX_BUDGET, stop_at_finite=False):
    """A census whose open classes are infinite components.

    Returns ``(census, certified)``. Under NoPromise or a seedless two-end
    promise, classes still open at the budget are presumed infinite and
    ``certified`` is False. Returns ``(census, None)`` when the budget ran
    out under a promise that should have settled the question.
    """
    census = component_census(
        G, removed, extra, open_allowance(G, promise, removed), budget, stop_at_finite
    )
    if not census.exhausted:
        return census, True
    if isinstance(promise, NoPromise) or (isinstance(promise, TwoEnds) and not promise.seed):
        return census, False
    return census, None


def connectivity_after_removal(G: Graph, removed, promise=OneEnd(), budget: int = DEFAULT_VERTEX_BUDGET):
    """Decide whether G - removed has a finite connected component.

    A single surviving class is always an infinite component (G is infinite
    and connected). Two classes suffice under a two-end promise whose seed is
    contained in ``removed``. Otherwise the answer is Unknown at the budget,
    except under NoPromise, which reports open classes as presumed infinite.
    """
    removed = set(removed)
    if isinstance(G, FiniteGraph):
        comps = G.components(removed)
        if comps:
            return HasFiniteComponent(frozenset(comps[0]))
        return NoFiniteComponent(())
    if not removed:
        if G.finite:
            return HasFiniteComponent(frozenset(G.vertices()))
        return NoFiniteComponent(((G.default_center(),),))
    census, certified = certified_census(G, removed, promise, budget=budget, stop_at_finite=True)
    if census.finite:
        return HasFiniteComponent(census.finite[0])
    if certified is None:
        return UnknownConnectivity(
            f"{len(census.classes)} classes still open at budget {budget}", census.classes
        )
    return NoFiniteComponent(census.classes, certified=certified)


class SubGraph(Graph):
    """View of a graph with a finite vertex set removed."""

    def __init__(self, parent: Graph, removed):
        self.parent = parent
        self.removed = frozenset(removed)
        self.finite = parent.finite

    def neighbors(self, v):
        self.check_vertex(v)
        return [y for y in self.parent.neighbors(v) if y not in self.removed]

    def vertex_key(self, v):
        return self.parent.vertex_key(v)

    def vertices(self):
        return (v for v in self.parent.vertices() if v not in self.removed)

    def check_vertex(self, v):
        self.parent.check_vertex(v)
        if v in self.removed:
            raise UnknownVertex(v)

    def format_vertex(self, v):
        return self.parent.format_vertex(v)

    def vertex_to_json(self, v):
        return self.parent.vertex_to_json(v)


def end_count_estimate(G: Graph, r: int, R: int, center=None, cap: int = BALL_CAP) -> int:
    """Components of the annulus {v : r <= d(center, v) <= R} that reach distance R.

    Only the open ball of radius r is cut out, so r = 1 removes the center.
    """
    if R <= r:
        raise ValueError("probe radius must exceed the inner radius")
    center = G.default_center() if center is None else center
    dist = bfs_ball(G, center, R, cap)
    annulus = {v for v, d in dist.items() if d >= r}
    seen, count = set(), 0
    for s in G.sorted_vertices(annulus):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        touches = False
        while queue:
            x = queue.popleft()
            touches |= dist[x] == R
            for y in G.neighbors(x):
                if y in annulus and y not in seen:
                    seen.add(y)
                    queue.append(y)
        count += touches
    return count
