"""Finitely generated groups with decidable word problem.

Four kinds are supported, each with its standard symmetric generating set:

* ``IntegerLattice(d)``: Z^d, generators ``x1, x1-, ..., xd, xd-``;
  elements are integer tuples.
* ``FreeGroup(k)``: generators ``a, a-, b, b-, ...``; elements are freely
  reduced tuples of signed letter indices (``a`` is 1, ``a-`` is -1).
* ``FiniteGroup(table)``: multiplication table over ``0..n-1``; elements are
  indices.
* ``DirectProduct(left, right)``: generators ``L.<name>`` and ``R.<name>``;
  elements are pairs.

Words are tuples of generator names. Anywhere a word is accepted, a
space-separated string is accepted too (``"x1 x2 x1-"``).

Every group carries a computable numbering: the identity first, then each
sphere of the word metric in increasing lexicographic order of canonical
forms, with inverse letters preceding positive ones.
"""
from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import InvalidGroup, ResourceLimit, UnknownGenerator

Element = Hashable
Word = tuple

BALL_CAP = 10**6


def parse_word(w) -> Word:
    """Normalize a word given as a string or a sequence of names."""
    if isinstance(w, str):
        w = w.replace("⁻¹", "-").split()
    return tuple(s for s in w if s != "ε")


def format_word(w: Sequence[str]) -> str:
    return " ".join(w)


@dataclass(frozen=True)
class Ball:
    radius: int
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self._set

    @property
    def _set(self):
        s = self.__dict__.get("_cached_set")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_cached_set", s)
        return s


class Group:
    """Base class. Subclasses provide the arithmetic and the generator table."""

    kind = "abstract"

    def __init__(self, generators: dict, inverse_names: dict):
        # generators: name -> element, in declaration order
        self._gens = dict(generators)
        self._inv_names = dict(inverse_names)
        self.generators = tuple(self._gens)
        # BFS layer cache for the numbering; grows monotonically
        self._layers = [[self.identity()]]
        self._dist = {self.identity(): 0}
        self._parent = {}
        self._closed = False
        self._offsets = [0, 1]

    # arithmetic, overridden
    def identity(self):
        raise NotImplementedError

    def mul(self, g, h):
        raise NotImplementedError

    def inv(self, g):
        raise NotImplementedError

    def sort_key(self, g):
        raise NotImplementedError

    def to_dict(self) -> dict:
        raise NotImplementedError

    def element_to_json(self, g):
        raise NotImplementedError

    def element_from_json(self, obj):
        raise NotImplementedError

    def is_element(self, g) -> bool:
        raise NotImplementedError

    # equality is structural on the file form
    def __eq__(self, other):
        return isinstance(other, Group) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(repr(self))

    def __repr__(self):
        return f"{type(self).__name__}({self.to_dict()})"

    # generators and words
    def generator(self, name: str):
        try:
            return self._gens[name]
        except KeyError:
            raise UnknownGenerator(name) from None

    def inverse_name(self, name: str) -> str:
        if name not in self._inv_names:
            raise UnknownGenerator(name)
        return self._inv_names[name]

    def generator_elements(self) -> list:
        """Distinct non-identity generator elements, in declaration order."""
        out, seen = [], set()
        e = self.identity()
        for name in self.generators:
            g = self._gens[name]
            if g != e and g not in seen:
                seen.add(g)
                out.append(g)
        return out

    def evaluate(self, w):
        g = self.identity()
        for name in parse_word(w):
            g = self.mul(g, self.generator(name))
        return g

    def word_problem(self, w) -> bool:
        return self.evaluate(w) == self.identity()

    def inverse_word(self, w) -> Word:
        return tuple(self.inverse_name(s) for s in reversed(parse_word(w)))

    def length(self, g) -> int:
        """Word length |g| for the standard generating set."""
        while g not in self._dist:
            if not self._grow():
                raise ValueError(f"{g!r} is not an element of {self!r}")
        return self._dist[g]

    def distance(self, g, h) -> int:
        return self.length(self.mul(self.inv(g), h))

    def order_key(self, g):
        """Position key of the numbering: shorter first, then lexicographic."""
        return (self.length(g), self.sort_key(g))

    def word_of(self, g) -> Word:
        """A geodesic word for g (the one recorded by the numbering's BFS)."""
        self.length(g)
        out = []
        while g in self._parent:
            g, name = self._parent[g]
            out.append(name)
        return tuple(reversed(out))

    # numbering
    def _grow(self) -> bool:
        if self._closed:
            return False
        last = self._layers[-1]
        seen = self._dist
        n = len(self._layers)
        fresh = {}
        for g in last:
            for name in self.generators:
                h = self.mul(g, self._gens[name])
                if h not in seen and h not in fresh:
                    fresh[h] = (g, name)
        if not fresh:
            self._closed = True
            return False
        layer = sorted(fresh, key=self.sort_key)
        for h in layer:
            seen[h] = n
            self._parent[h] = fresh[h]
        self._layers.append(layer)
        self._offsets.append(self._offsets[-1] + len(layer))
        return True

    def sphere(self, n: int) -> list:
        while len(self._layers) <= n:
            if not self._grow():
                return []
        return list(self._layers[n])

    def ball(self, n: int, cap: int = BALL_CAP) -> Ball:
        if n < 0:
            raise ValueError("radius must be non-negative")
        elems = []
        for k in range(n + 1):
            layer = self.sphere(k)
            if not layer:
                break
            elems.extend(layer)
            if len(elems) > cap:
                raise ResourceLimit(f"|B_{n}| exceeds cap {cap}")
        return Ball(n, tuple(elems))

    def element_at(self, i: int):
        """The numbering nu(i)."""
        if i < 0:
            raise IndexError(i)
        while self._offsets[-1] <= i:
            if not self._grow():
                raise IndexError(f"group has only {self._offsets[-1]} elements")
        k = next(k for k in range(len(self._layers)) if self._offsets[k + 1] > i)
        return self._layers[k][i - self._offsets[k]]

    def index_of(self, g) -> int:
        """The inverse numbering nu^{-1}(g)."""
        n = self.length(g)
        layer = self._layers[n]
        key = self.sort_key(g)
        lo, hi = 0, len(layer)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.sort_key(layer[mid]) < key:
                lo = mid + 1
            else:
                hi = mid
        return self._offsets[n] + lo

    def enumerate(self):
        """Yield the elements in numbering order (finite groups stop)."""
        i = 0
        while True:
            try:
                yield self.element_at(i)
            except IndexError:
                return
            i += 1

    def format_element(self, g) -> str:
        import json

        return json.dumps(self.element_to_json(g), separators=(",", ":"))


class IntegerLattice(Group):
    kind = "zd"

    def __init__(self, d: int):
        if d < 1:
            raise InvalidGroup("dimension must be positive")
        self.d = d
        gens, invs = {}, {}
        for i in range(d):
            e = tuple(1 if j == i else 0 for j in range(d))
            ne = tuple(-x for x in e)
            gens[f"x{i + 1}"] = e
            gens[f"x{i + 1}-"] = ne
            invs[f"x{i + 1}"] = f"x{i + 1}-"
            invs[f"x{i + 1}-"] = f"x{i + 1}"
        super().__init__(gens, invs)

    def identity(self):
        return (0,) * self.d

    def mul(self, g, h):
        return tuple(a + b for a, b in zip(g, h))

    def inv(self, g):
        return tuple(-a for a in g)

    def sort_key(self, g):
        return g

    def length(self, g):
        return sum(abs(a) for a in g)

    def word_of(self, g):
        out = []
        for i, a in enumerate(g):
            name = f"x{i + 1}" if a > 0 else f"x{i + 1}-"
            out.extend([name] * abs(a))
        return tuple(out)

    def is_element(self, g):
        return isinstance(g, tuple) and len(g) == self.d and all(isinstance(a, int) for a in g)

    def to_dict(self):
        return {"kind": "zd", "d": self.d}

    def element_to_json(self, g):
        return list(g)

    def element_from_json(self, obj):
        g = tuple(int(a) for a in obj)
        if len(g) != self.d:
            raise ValueError(f"expected a {self.d}-vector, got {obj!r}")
        return g


def _free_letter_names(rank: int) -> list:
    if rank <= 26:
        return list(string.ascii_lowercase[:rank])
    return [f"f{i + 1}" for i in range(rank)]


class FreeGroup(Group):
    kind = "free"

    def __init__(self, rank: int):
        if rank < 1:
            raise InvalidGroup("rank must be positive")
        self.rank = rank
        self.letters = _free_letter_names(rank)
        gens, invs = {}, {}
        for i, name in enumerate(self.letters):
            gens[name] = (i + 1,)
            gens[name + "-"] = (-(i + 1),)
            invs[name] = name + "-"
            invs[name + "-"] = name
        super().__init__(gens, invs)

    def identity(self):
        return ()

    def mul(self, g, h):
        out = list(g)
        for x in h:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return tuple(out)

    def inv(self, g):
        return tuple(-x for x in reversed(g))

    def sort_key(self, g):
        # a- < a < b- < b < ...
        return tuple((abs(x), 1 if x > 0 else 0) for x in g)

    def length(self, g):
        return len(g)

    def _letter_name(self, x):
        name = self.letters[abs(x) - 1]
        return name if x > 0 else name + "-"

    def word_of(self, g):
        return tuple(self._letter_name(x) for x in g)

    def is_element(self, g):
        return isinstance(g, tuple) and all(
            isinstance(x, int) and x != 0 and abs(x) <= self.rank for x in g
        ) and all(g[i] != -g[i + 1] for i in range(len(g) - 1))

    def to_dict(self):
        return {"kind": "free", "rank": self.rank}

    def element_to_json(self, g):
        return format_word(self.word_of(g))

    def element_from_json(self, obj):
        return self.evaluate(obj)


class FiniteGroup(Group):
    """A finite group given by its multiplication table ``table[i][j] = i*j``."""

    kind = "finite"

    def __init__(self, table: Sequence[Sequence[int]], generators: dict | None = None):
        table = tuple(tuple(int(x) for x in row) for row in table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise InvalidGroup("table must be a nonempty square")
        if any(not 0 <= x < n for row in table for x in row):
            raise InvalidGroup("table entries must lie in 0..n-1")
        ids = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
        if not ids:
            raise InvalidGroup("table has no identity")
        e = ids[0]
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise InvalidGroup(f"table is not associative at {(a, b, c)}")
        inverse = {}
        for a in range(n):
            bs = [b for b in range(n) if table[a][b] == e and table[b][a] == e]
            if not bs:
                raise InvalidGroup(f"element {a} has no inverse")
            inverse[a] = bs[0]
        self.table = table
        self.order = n
        self._e = e
        self._inverse = inverse
        self._explicit = generators is not None
        gens, invs = {}, {}
        if generators is None:
            for a in range(n):
                if a != e:
                    gens[f"g{a}"] = a
            for a in range(n):
                if a != e:
                    invs[f"g{a}"] = f"g{inverse[a]}"
        else:
            for name, a in generators.items():
                a = int(a)
                if not 0 <= a < n:
                    raise InvalidGroup(f"generator {name} is not an element")
                gens[name] = a
            by_elem = {}
            for name, a in gens.items():
                by_elem.setdefault(a, name)
            for name, a in list(gens.items()):
                b = inverse[a]
                if b in by_elem:
                    invs[name] = by_elem[b]
                else:
                    inv_name = name + "-"
                    gens[inv_name] = b
                    by_elem[b] = inv_name
                    invs[name] = inv_name
                    invs[inv_name] = name
        self._generator_spec = dict(generators) if generators is not None else None
        super().__init__(gens, invs)
        if len(self.ball(n)) != n:
            raise InvalidGroup("generators do not generate the group")

    def identity(self):
        return self._e

    def mul(self, g, h):
        return self.table[g][h]

    def inv(self, g):
        return self._inverse[g]

    def sort_key(self, g):
        return g

    def is_element(self, g):
        return isinstance(g, int) and 0 <= g < self.order

    def to_dict(self):
        d = {"kind": "finite", "table": [list(r) for r in self.table]}
        if self._generator_spec is not None:
            d["generators"] = dict(self._generator_spec)
        return d

    def element_to_json(self, g):
        return g

    def element_from_json(self, obj):
        g = int(obj)
        if not self.is_element(g):
            raise ValueError(f"{obj!r} is not an element")
        return g


class DirectProduct(Group):
    kind = "product"

    def __init__(self, left: Group, right: Group):
        self.left = left
        self.right = right
        gens, invs = {}, {}
        for name in left.generators:
            gens["L." + name] = (left.generator(name), right.identity())
            invs["L." + name] = "L." + left.inverse_name(name)
        for name in right.generators:
            gens["R." + name] = (left.identity(), right.generator(name))
            invs["R." + name] = "R." + right.inverse_name(name)
        super().__init__(gens, invs)

    def identity(self):
        return (self.left.identity(), self.right.identity())

    def mul(self, g, h):
        return (self.left.mul(g[0], h[0]), self.right.mul(g[1], h[1]))

    def inv(self, g):
        return (self.left.inv(g[0]), self.right.inv(g[1]))

    def sort_key(self, g):
        return (self.left.order_key(g[0]), self.right.order_key(g[1]))

    def length(self, g):
        return self.left.length(g[0]) + self.right.length(g[1])

    def word_of(self, g):
        return tuple("L." + s for s in self.left.word_of(g[0])) + tuple(
            "R." + s for s in self.right.word_of(g[1])
        )

    def is_element(self, g):
        return (
            isinstance(g, tuple)
            and len(g) == 2
            and self.left.is_element(g[0])
            and self.right.is_element(g[1])
        )

    def to_dict(self):
        return {"kind": "product", "left": self.left.to_dict(), "right": self.right.to_dict()}

    def element_to_json(self, g):
        return [self.left.element_to_json(g[0]), self.right.element_to_json(g[1])]

    def element_from_json(self, obj):
        left, right = obj
        return (self.left.element_from_json(left), self.right.element_from_json(right))


def group_from_dict(spec: dict) -> Group:
    kind = spec.get("kind")
    if kind == "zd":
        return IntegerLattice(int(spec["d"]))
    if kind == "free":
        return FreeGroup(int(spec["rank"]))
    if kind == "finite":
        return FiniteGroup(spec["table"], spec.get("generators"))
    if kind == "product":
        return DirectProduct(group_from_dict(spec["left"]), group_from_dict(spec["right"]))
    raise InvalidGroup(f"unknown group kind {kind!r}")


def cyclic_group(n: int, generator: str = "g") -> FiniteGroup:
    """Z/n as a FiniteGroup generated by a single named element."""
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, {generator: 1 % n} if n > 1 else {})


def evaluate(spec: Group, w):
    return spec.evaluate(w)


def word_problem(spec: Group, w) -> bool:
    return spec.word_problem(w)


def ball(spec: Group, n: int, cap: int = BALL_CAP) -> Ball:
    return spec.ball(n, cap)


def reduced_words(group: Group, max_length: int) -> Iterable[Word]:
    """All words of length 1..max_length with no adjacent cancelling pair."""
    frontier = [()]
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for s in group.generators:
                if w and group.inverse_name(w[-1]) == s:
                    continue
                nxt.append(w + (s,))
        yield from nxt
        frontier = nxt
