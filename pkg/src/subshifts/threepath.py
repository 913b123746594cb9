"""3-paths: injective vertex sequences whose consecutive vertices are at
distance at most 3.

The finite construction follows the classical proof that the cube of a
connected finite graph is Hamiltonian: split at the target endpoint, solve
both halves, concatenate. On infinite graphs, finite 3-paths are grown on
both sides while keeping the complement free of finite components, which
yields bi-infinite Hamiltonian 3-paths (one or two ends) and orbit
decompositions (any number of ends).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    Disconnected,
    EqualEndpoints,
    TargetUnreachable,
    UnknownVertex,
)
from .graphs import (
    DEFAULT_VERTEX_BUDGET,
    FiniteGraph,
    Graph,
    NoPromise,
    OneEnd,
    SubGraph,
    TwoEnds,
    certified_census,
    connectivity_after_removal,
    HasFiniteComponent,
    NoFiniteComponent,
)


@dataclass(frozen=True)
class ThreePath:
    """Vertices indexed by the integer interval [start, start + len - 1]."""

    start: int
    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def end(self) -> int:
        return self.start + len(self.vertices) - 1

    @property
    def initial(self):
        return self.vertices[0]

    @property
    def final(self):
        return self.vertices[-1]

    def at(self, i: int):
        if not self.start <= i <= self.end:
            raise IndexError(i)
        return self.vertices[i - self.start]

    def index_of(self, v) -> int:
        return self.start + self.vertices.index(v)

    def items(self):
        return zip(range(self.start, self.end + 1), self.vertices)

    def extends(self, other: "ThreePath") -> bool:
        lo = other.start - self.start
        return lo >= 0 and self.vertices[lo:lo + len(other)] == other.vertices


def jump_lengths(G: Graph, vertices) -> list:
    return [G.distance(a, b) for a, b in zip(vertices, vertices[1:])]


def path_violations(G: Graph, path, hamiltonian_on=None, endpoints=None, strict_ends=False) -> list:
    """Reasons why ``path`` fails to be a 3-path (empty list when valid).

    With ``hamiltonian_on`` the vertex set must be exactly that set. With
    ``strict_ends`` the first and last jumps must have length at most 2 and no
    two consecutive jumps may have length 3.
    """
    vs = list(path.vertices if isinstance(path, ThreePath) else path)
    out = []
    if len(set(vs)) != len(vs):
        out.append("not injective")
    if hamiltonian_on is not None and set(vs) != set(hamiltonian_on):
        out.append("not Hamiltonian")
    if endpoints is not None and vs and (vs[0], vs[-1]) != tuple(endpoints):
        out.append("wrong endpoints")
    jumps = [G.distance(a, b, 3) for a, b in zip(vs, vs[1:])]
    if any(j is None for j in jumps):
        out.append("jump longer than 3")
    elif strict_ends and jumps:
        if jumps[0] > 2 or jumps[-1] > 2:
            out.append("end jump longer than 2")
        if any(a == 3 and b == 3 for a, b in zip(jumps, jumps[1:])):
            out.append("two consecutive jumps of length 3")
    return out


# finite Hamiltonian 3-paths


def _component(adj, S, seed, skip):
    seen = {seed}
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for y in adj(x):
            if y in S and y != skip and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def hamiltonian_on(G: Graph, vertex_set, u, v) -> list:
    """Hamiltonian 3-path of the subgraph induced on ``vertex_set`` from u to v.

    First and last jumps have length at most 2 and no two consecutive jumps
    have length 3.
    """
    S = set(vertex_set)
    if u not in S or v not in S:
        raise UnknownVertex(u if u not in S else v)
    if u == v:
        if len(S) == 1:
            return [u]
        raise EqualEndpoints("endpoints must differ")
    adj = G.neighbors
    key = G.vertex_key
    if len(_component(adj, S, u, None)) != len(S):
        raise Disconnected("vertex set does not induce a connected graph")
    out = []
    tasks = [(frozenset(S), u, v)]
    while tasks:
        T, a, b = tasks.pop()
        if len(T) == 1:
            out.append(a)
            continue
        if len(T) == 2:
            out.extend([a, b])
            continue
        Ta = _component(adj, T, a, b)
        Tb = T - Ta
        if len(Ta) == 1:
            a2 = a
        else:
            near_b = set(adj(b))
            cands = [x for x in Ta if x != a and x in near_b]
            if not cands:
                cands = [x for x in adj(a) if x in Ta and x != a]
            a2 = min(cands, key=key)
        if len(Tb) == 1:
            b2 = b
        else:
            b2 = min((x for x in adj(b) if x in Tb and x != b), key=key)
        tasks.append((frozenset(Tb), b2, b))
        tasks.append((frozenset(Ta), a, a2))
    return out


def finite_hamiltonian(G: FiniteGraph, u, v) -> ThreePath:
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        raise EqualEndpoints("endpoints must differ")
    if not G.is_connected():
        raise Disconnected("graph is not connected")
    return ThreePath(0, tuple(hamiltonian_on(G, G.vertex_list, u, v)))


# infinite graphs


def _shortest_path(G: Graph, u, w, budget: int) -> list:
    if u == w:
        return [u]
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in G.neighbors(x):
            if y in parent:
                continue
            parent[y] = x
            if y == w:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            if len(parent) > budget:
                raise BudgetExceeded(f"no path found within {budget} vertices")
            queue.append(y)
    raise TargetUnreachable("target lies in another component")


def _absorb(G: Graph, core, promise, budget: int) -> set:
    """core together with every finite component of G - core."""
    census, certified = certified_census(G, core, promise, budget=budget)
    if certified is None:
        raise BudgetExceeded("could not separate finite components within the budget")
    return set(core) | census.finite_vertices()


def _outside_neighbors(G: Graph, Lam: set, x) -> list:
    return [y for y in G.neighbors(x) if y not in Lam]


def right_extensible_from(G: Graph, u, visit, promise=NoPromise(), budget: int = DEFAULT_VERTEX_BUDGET) -> ThreePath:
    """A right-extensible 3-path starting at u and visiting ``visit``."""
    G.check_vertex(u)
    path = _shortest_path(G, u, visit, budget)
    Lam = _absorb(G, path, promise, budget)
    key = G.vertex_key
    ends = [x for x in Lam if x != u and _outside_neighbors(G, Lam, x)]
    if not ends:
        if len(Lam) == 1:
            return ThreePath(0, (u,))
        if not _outside_neighbors(G, Lam, u):
            raise BudgetExceeded("absorbed set has no outside neighbour")
        ends = [x for x in G.neighbors(u) if x in Lam and x != u]
    w = min(ends, key=key)
    return ThreePath(0, tuple(hamiltonian_on(G, Lam, u, w)))


def bi_extensible_visiting(G: Graph, u, promise=NoPromise(), budget: int = DEFAULT_VERTEX_BUDGET) -> ThreePath:
    """A bi-extensible 3-path through u."""
    G.check_vertex(u)
    key = G.vertex_key
    others = [x for x in G.neighbors(u) if x != u]
    if not others:
        raise Disconnected("vertex has no neighbour")
    v = min(others, key=key)
    Lam = _absorb(G, {u, v}, promise, budget)
    starts = [x for x in Lam if _outside_neighbors(G, Lam, x)]
    if not starts:
        raise BudgetExceeded("absorbed set has no outside neighbour")
    w0 = min(starts, key=key)
    w1 = min((x for x in G.neighbors(w0) if x in Lam and x != w0), key=key)
    return ThreePath(0, tuple(hamiltonian_on(G, Lam, w0, w1)))


@dataclass(frozen=True)
class Verdict:
    """Tri-state answer: ``value`` is True, False, or None (unknown)."""

    value: bool | None
    reason: str = ""
    certified: bool = True

    def __bool__(self):
        return self.value is True


def extension_vertices(G: Graph, f: ThreePath, endpoint) -> list:
    """Vertices off f within distance 3 of ``endpoint``, nearest first."""
    on = set(f.vertices)
    dist = {endpoint: 0}
    frontier = [endpoint]
    for d in range(1, 4):
        nxt = []
        for x in frontier:
            for y in G.neighbors(x):
                if y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return sorted((y for y in dist if y not in on), key=lambda y: (dist[y], G.vertex_key(y)))


def is_bi_extensible(G: Graph, f: ThreePath, promise=OneEnd(), budget: int = DEFAULT_VERTEX_BUDGET) -> Verdict:
    near_final = extension_vertices(G, f, f.final)
    near_initial = extension_vertices(G, f, f.initial)
    if not near_final:
        return Verdict(False, "no free vertex within distance 3 of the final vertex")
    if not near_initial:
        return Verdict(False, "no free vertex within distance 3 of the initial vertex")
    if len(near_final) == 1 and near_initial == near_final:
        return Verdict(False, "both ends share a single extension vertex")
    res = connectivity_after_removal(G, set(f.vertices), promise, budget)
    if isinstance(res, HasFiniteComponent):
        return Verdict(False, f"finite component of size {len(res.component)}")
    if isinstance(res, NoFiniteComponent):
        return Verdict(True, "", res.certified)
    return Verdict(None, res.reason)


def _concat(left: list, f: ThreePath, right: list) -> ThreePath:
    return ThreePath(f.start - len(left), tuple(left) + f.vertices + tuple(right))


def extend(G: Graph, f: ThreePath, w, promise=OneEnd(), budget: int = DEFAULT_VERTEX_BUDGET) -> ThreePath:
    """A bi-extensible 3-path extending f on both sides and visiting w."""
    G.check_vertex(w)
    on = set(f.vertices)
    near_i = extension_vertices(G, f, f.initial)
    near_f = extension_vertices(G, f, f.final)
    if not near_i or not near_f:
        raise TargetUnreachable("path has no room to grow")
    census, certified = certified_census(G, on, promise, extra=set(near_i) | set(near_f) | ({w} - on), budget=budget)
    if certified is None:
        raise BudgetExceeded("components of the complement not separated within the budget")
    if census.finite:
        raise TargetUnreachable("path is not bi-extensible: complement has a finite component")
    cls = census.class_of
    target = w if w not in on else None
    pairs = [
        (u, v) for u in near_i for v in near_f
        if u != v and (target is None or cls[target] in (cls[u], cls[v]))
    ]
    if not pairs:
        raise TargetUnreachable("target is not in a component reachable from either end")
    u, v = pairs[0]
    rest = SubGraph(G, on)
    if target is None:
        target = v
    if cls[u] != cls[v]:
        g = right_extensible_from(rest, u, target if cls[target] == cls[u] else u, promise, budget)
        h = right_extensible_from(rest, v, target if cls[target] == cls[v] else v, promise, budget)
        new = _concat(list(reversed(g.vertices)), f, list(h.vertices))
    else:
        pu = _shortest_path(rest, u, target, budget)
        pv = _shortest_path(rest, v, target, budget)
        Lam0 = _absorb(rest, set(pu) | set(pv), promise, budget)
        p = hamiltonian_on(rest, Lam0, u, v)
        key = G.vertex_key
        u0 = min((x for x in Lam0 if _outside_neighbors(rest, Lam0, x)), key=key)
        b = p.index(u0)
        if b + 1 < len(p) and rest.distance(u0, p[b + 1], 2) is not None:
            cut = b + 1
        else:
            cut = b
        first, second = p[:cut], p[cut:]
        new = _concat(list(reversed(first)), f, list(reversed(second)))
    verdict = is_bi_extensible(G, new, promise, budget)
    if verdict.value is not True:
        raise BudgetExceeded(f"extension could not be validated: {verdict.reason}")
    return new


class PathGenerator:
    """Grows a bi-extensible 3-path over the vertex numbering, on demand."""

    def __init__(self, G: Graph, seed: ThreePath | None = None, promise=OneEnd(), budget: int = DEFAULT_VERTEX_BUDGET):
        self.graph = G
        self.budget = budget
        self._targets = iter(G.vertices())
        if seed is None:
            build_promise = promise
            if isinstance(promise, TwoEnds) and not promise.seed:
                build_promise = NoPromise()
            seed = bi_extensible_visiting(G, G.default_center(), build_promise, budget)
        bad = path_violations(G, seed)
        if bad:
            raise ValueError(f"seed is not a 3-path: {', '.join(bad)}")
        if isinstance(promise, TwoEnds) and not promise.seed:
            promise = TwoEnds(tuple(seed.vertices))
        self.promise = promise
        verdict = is_bi_extensible(G, seed, promise, budget)
        if verdict.value is not True:
            raise BudgetExceeded(f"seed is not bi-extensible: {verdict.reason or 'undecided'}")
        self.seed = seed
        self.path = seed
        self.processed = 0
        self._index = {v: i for i, v in seed.items()}

    def _set(self, path: ThreePath):
        self.path = path
        self._index = {v: i for i, v in path.items()}

    def step(self) -> ThreePath:
        """Process the next target of the numbering."""
        target = next(self._targets)
        self._set(extend(self.graph, self.path, target, self.promise, self.budget))
        self.processed += 1
        return self.path

    def run(self, n: int) -> ThreePath:
        for _ in range(n):
            self.step()
        return self.path

    def index_of(self, v) -> int:
        while v not in self._index:
            self._set(extend(self.graph, self.path, v, self.promise, self.budget))
        return self._index[v]

    def at(self, i: int):
        while not self.path.start <= i <= self.path.end:
            self.step()
        return self.path.at(i)


def hamiltonian_stream(G: Graph, seed: ThreePath | None = None, promise=OneEnd(), steps: int = 0, budget: int = DEFAULT_VERTEX_BUDGET) -> ThreePath:
    """The path after processing the first ``steps`` targets of the numbering."""
    return PathGenerator(G, seed, promise, budget).run(steps)


class TranslationAction:
    """v * n = f(f^-1(v) + n) along a growing Hamiltonian 3-path f."""

    def __init__(self, generator: PathGenerator):
        self.generator = generator

    def act(self, v, n: int):
        gen = self.generator
        return gen.at(gen.index_of(v) + n)


def orbit_partition(G: Graph, r: int, promise=NoPromise(), budget: int = 5000, center=None) -> list:
    """Disjoint 3-path fragments covering the ball of radius r.

    Fragments are built one at a time. Each starts as a bi-extensible path in
    the graph minus the earlier fragments, then absorbs every uncovered target
    it can reach from its ends; targets it cannot reach start new fragments.
    Each fragment is a finite window of one orbit.
    """
    from .graphs import bfs_ball

    center = G.default_center() if center is None else center
    targets = G.sorted_vertices(bfs_ball(G, center, r))
    used = set()
    fragments = []
    for t in targets:
        if t in used:
            continue
        H = SubGraph(G, used)
        f = bi_extensible_visiting(H, t, promise, budget)
        for w in targets:
            if w in used or w in f.vertices:
                continue
            try:
                f = extend(H, f, w, promise, budget)
            except TargetUnreachable:
                continue
        fragments.append(f)
        used |= set(f.vertices)
    return fragments


class OrbitAction:
    """v * n inside the fragment containing v."""

    def __init__(self, fragments):
        self.fragments = list(fragments)
        self._where = {}
        for k, f in enumerate(self.fragments):
            for i, v in f.items():
                self._where[v] = (k, i)

    def act(self, v, n: int):
        if v not in self._where:
            raise BudgetExceeded("vertex is outside the materialized fragments")
        k, i = self._where[v]
        f = self.fragments[k]
        if not f.start <= i + n <= f.end:
            raise BudgetExceeded("orbit window too short for this query")
        return f.at(i + n)
