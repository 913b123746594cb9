"""Locally admissible patterns, emptiness certificates, fixed points, entropy bounds.

Everything here reduces to one finite constraint problem: colour a finite
set of cells so that no translate of a forbidden pattern lands inside it.
``WindowCSP`` compiles that problem into nogoods (scope, forbidden value
tuples) and solves it by depth-first search with forward checking.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from ..errors import ResourceLimit
from ..groups import BALL_CAP, FiniteGroup, IntegerLattice
from ..patterns import Pattern
from .certificates import EmptyAt, NonemptyWitness, Unknown
from .presentation import SftPresentation

DEFAULT_MAX_PATTERNS = 10**6


class SearchBudget:
    """Counts search nodes and raises ResourceLimit past the limit."""

    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise ResourceLimit(f"search exceeded {self.limit} nodes")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class WindowCSP:
    """Colourings of ``cells`` avoiding every forbidden pattern placed inside.

    ``locate`` maps a group element to a cell index or None. The default is
    plain membership; a torus uses reduction modulo the periods instead.
    """

    def __init__(self, X: SftPresentation, cells, locate=None):
        G = X.group
        self.X = X
        self.cells = list(cells)
        index = {g: i for i, g in enumerate(self.cells)}
        locate = locate or index.get
        self.symbols = X.alphabet
        sym_index = {a: i for i, a in enumerate(self.symbols)}
        self.dead = False
        table = {}
        for support, valsets in X.forbidden_shapes().items():
            if not support:
                self.dead = True
                continue
            t0_inv = G.inv(support[0])
            for w in self.cells:
                g = G.mul(w, t0_inv)
                idxs = [locate(G.mul(g, t)) for t in support]
                if None in idxs:
                    continue
                for vals in valsets:
                    merged = {}
                    for i, v in zip(idxs, vals):
                        if merged.setdefault(i, v) != v:
                            break
                    else:
                        scope = tuple(sorted(merged))
                        table.setdefault(scope, set()).add(
                            tuple(sym_index[merged[i]] for i in scope)
                        )
        full = (1 << len(self.symbols)) - 1
        self.initial = [full] * len(self.cells)
        self.constraints = []
        self.by_cell = [[] for _ in self.cells]
        for scope, tuples in table.items():
            if len(scope) == 1:
                for (a,) in tuples:
                    self.initial[scope[0]] &= ~(1 << a)
                continue
            cid = len(self.constraints)
            self.constraints.append((scope, frozenset(tuples)))
            for i in scope:
                self.by_cell[i].append(cid)
        if any(d == 0 for d in self.initial):
            self.dead = True
        if not self.dead:
            singles = [i for i, d in enumerate(self.initial) if d & (d - 1) == 0]
            self.initial = self._propagate(self.initial, singles)
            if self.initial is None:
                self.dead = True

    def _propagate(self, dom, queue):
        """Forward checking from newly fixed cells; returns None on wipe-out."""
        dom = list(dom)
        queue = list(queue)
        while queue:
            x = queue.pop()
            for cid in self.by_cell[x]:
                scope, forb = self.constraints[cid]
                free = -1
                nfree = 0
                for pos, y in enumerate(scope):
                    d = dom[y]
                    if d & (d - 1):
                        nfree += 1
                        free = pos
                        if nfree > 1:
                            break
                if nfree > 1:
                    continue
                vals = [dom[y].bit_length() - 1 for y in scope]
                if nfree == 0:
                    if tuple(vals) in forb:
                        return None
                    continue
                y = scope[free]
                keep = 0
                for a in _bits(dom[y]):
                    vals[free] = a
                    if tuple(vals) not in forb:
                        keep |= 1 << a
                if keep == 0:
                    return None
                if keep != dom[y]:
                    dom[y] = keep
                    if keep & (keep - 1) == 0:
                        queue.append(y)
        return dom

    def assign(self, dom, i, a):
        if not dom[i] >> a & 1:
            return None
        dom = list(dom)
        dom[i] = 1 << a
        return self._propagate(dom, [i])

    def solve(self, dom=None, budget: SearchBudget | None = None):
        """A full assignment (list of symbols) extending ``dom``, or None."""
        if self.dead:
            return None
        dom = self.initial if dom is None else dom
        budget = budget or SearchBudget(None)
        stack = [dom]
        while stack:
            dom = stack.pop()
            budget.tick()
            best, best_count = -1, None
            for i, d in enumerate(dom):
                if d & (d - 1):
                    c = bin(d).count("1")
                    if best_count is None or c < best_count:
                        best, best_count = i, c
                        if c == 2:
                            break
            if best < 0:
                return [self.symbols[d.bit_length() - 1] for d in dom]
            children = []
            for a in _bits(dom[best]):
                nd = self.assign(dom, best, a)
                if nd is not None:
                    children.append(nd)
            stack.extend(reversed(children))
        return None

    def enumerate_prefix(self, k: int, budget: SearchBudget | None = None):
        """Yield, in lexicographic order, every assignment of the first k cells
        that extends to a full solution."""
        if self.dead:
            return
        budget = budget or SearchBudget(None)

        def rec(dom, i):
            budget.tick()
            if i == k:
                if self.solve(dom, budget) is not None:
                    yield tuple(self.symbols[dom[j].bit_length() - 1] for j in range(k))
                return
            for a in _bits(dom[i]):
                nd = dom if dom[i] == 1 << a else self.assign(dom, i, a)
                if nd is not None:
                    yield from rec(nd, i + 1)

        yield from rec(self.initial, 0)


@dataclass(frozen=True)
class LocalLanguage:
    """Patterns sharing one support, stored as value tuples in support order."""

    support: tuple
    patterns: tuple
    radius: int | None = None

    def __len__(self):
        return len(self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def as_patterns(self, group) -> list:
        return [Pattern(group, tuple(zip(self.support, vals))) for vals in self.patterns]

    def restrict(self, cells) -> set:
        pos = [self.support.index(g) for g in cells]
        return {tuple(p[i] for i in pos) for p in self.patterns}


def _ordered_window(support, window):
    inner = list(support)
    seen = set(inner)
    return inner + [g for g in window if g not in seen]


def iter_locally_admissible_on(X: SftPresentation, support, window, max_patterns=DEFAULT_MAX_PATTERNS):
    support = list(support)
    csp = WindowCSP(X, _ordered_window(support, window))
    budget = SearchBudget(None if max_patterns is None else 50 * max_patterns + 10**5)
    for count, vals in enumerate(csp.enumerate_prefix(len(support), budget), 1):
        if max_patterns is not None and count > max_patterns:
            raise ResourceLimit(f"more than {max_patterns} locally admissible patterns")
        yield vals


def locally_admissible_on(X: SftPresentation, support, window, max_patterns=DEFAULT_MAX_PATTERNS) -> LocalLanguage:
    """Patterns on ``support`` that extend to a valid pattern on ``window``."""
    support = tuple(support)
    pats = tuple(iter_locally_admissible_on(X, support, window, max_patterns))
    return LocalLanguage(support, pats)


def locally_admissible(
    X: SftPresentation, n: int, m: int = 0, max_patterns=DEFAULT_MAX_PATTERNS, cap=BALL_CAP
) -> LocalLanguage:
    """Patterns on B_n extendable to a valid pattern on B_{n+m}."""
    G = X.group
    inner = G.ball(n, cap).elements
    window = G.ball(n + m, cap).elements
    lang = locally_admissible_on(X, inner, window, max_patterns)
    return LocalLanguage(lang.support, lang.patterns, n)


def satisfiable_on(X: SftPresentation, cells, node_limit=None):
    """A valid colouring of ``cells`` (as a Pattern), or None."""
    cells = list(cells)
    sol = WindowCSP(X, cells).solve(budget=SearchBudget(node_limit))
    if sol is None:
        return None
    return Pattern.from_mapping(X.group, zip(cells, sol))


def fixed_points(X: SftPresentation) -> list:
    """Symbols a whose constant configuration avoids every forbidden coding."""
    return [
        a for a in X.alphabet
        if not any(all(v == a for v in c.values) for c in X.forbidden)
    ]


def has_fixed_point(X: SftPresentation) -> bool:
    return bool(fixed_points(X))


def _torus_shapes(d: int, max_cells: int):
    shapes = [
        p for p in itertools.product(range(1, max_cells + 1), repeat=d) if math.prod(p) <= max_cells
    ]
    return sorted(shapes, key=lambda p: (math.prod(p), p))


def periodic_witness(X: SftPresentation, max_cells: int = 36, node_limit=None):
    """Search tori Z^d / (p1 Z x ... x pd Z) for a valid periodic configuration."""
    G = X.group
    if not isinstance(G, IntegerLattice):
        raise TypeError("periodic search needs a lattice group")
    budget = SearchBudget(node_limit)
    for periods in _torus_shapes(G.d, max_cells):
        cells = list(itertools.product(*(range(p) for p in periods)))
        index = {c: i for i, c in enumerate(cells)}

        def locate(g, periods=periods, index=index):
            return index[tuple(a % p for a, p in zip(g, periods))]

        sol = WindowCSP(X, cells, locate).solve(budget=budget)
        if sol is not None:
            return periods, Pattern.from_mapping(G, zip(cells, sol))
    return None


def check_empty(
    X: SftPresentation,
    max_radius: int = 6,
    max_lookahead: int = 2,
    max_patterns: int = DEFAULT_MAX_PATTERNS,
    max_torus_cells: int = 36,
):
    """Try to decide emptiness within the budget.

    The budget bounds the window radius (max_radius + max_lookahead) and the
    number of search nodes (a multiple of max_patterns).
    """
    G = X.group
    fps = fixed_points(X)
    if fps:
        return NonemptyWitness("fixed-point", fps[0])
    if isinstance(G, IntegerLattice) and G.d == 1:
        from .zshift import z_decide

        dec = z_decide(X)
        if not dec.empty:
            word = dec.periodic_word()
            cells = [(i,) for i in range(len(word))]
            return NonemptyWitness(
                "periodic", Pattern.from_mapping(G, zip(cells, word)), (len(word),)
            )
        r = 0
        while True:
            if satisfiable_on(X, G.ball(r).elements) is None:
                return EmptyAt(r)
            r += 1
    node_limit = 50 * max_patterns
    try:
        for r in range(max_radius + max_lookahead + 1):
            ball = G.ball(r)
            sol = satisfiable_on(X, ball.elements, node_limit)
            if sol is None:
                return EmptyAt(r)
            if isinstance(G, FiniteGroup) and len(ball) == G.order:
                return NonemptyWitness("finite-group", sol)
        if isinstance(G, IntegerLattice):
            found = periodic_witness(X, max_torus_cells, node_limit)
            if found is not None:
                periods, pat = found
                return NonemptyWitness("periodic", pat, periods)
    except ResourceLimit as exc:
        return Unknown(str(exc))
    return Unknown(f"no contradiction up to radius {max_radius + max_lookahead}")


def box(d: int, lo: int, hi: int) -> list:
    """Lattice points of [lo, hi)^d in lexicographic order."""
    return list(itertools.product(range(lo, hi), repeat=d))


def entropy_upper_bound(
    X: SftPresentation, n: int, m: int = 0, max_patterns=DEFAULT_MAX_PATTERNS
) -> float:
    """log |patterns on [0,n)^d extendable to [-m, n+m)^d| / n^d."""
    G = X.group
    if not isinstance(G, IntegerLattice):
        raise TypeError("entropy bounds are computed on lattice groups")
    if n < 1:
        raise ValueError("box side must be positive")
    inner = box(G.d, 0, n)
    window = box(G.d, -m, n + m)
    count = sum(1 for _ in iter_locally_admissible_on(X, inner, window, max_patterns))
    if count == 0:
        return float("-inf")
    return math.log(count) / n**G.d
