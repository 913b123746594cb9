"""Pattern codings (word-indexed) and patterns (element-indexed)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import Inconsistent
from .groups import Group, format_word, parse_word


@dataclass(frozen=True)
class PatternCoding:
    """A finite partial coloring indexed by words over the generators."""

    support: tuple
    values: tuple

    def __post_init__(self):
        support = tuple(parse_word(w) for w in self.support)
        values = tuple(int(v) for v in self.values)
        if len(support) != len(values):
            raise ValueError("support and values differ in length")
        if len(set(support)) != len(support):
            raise ValueError("support words must be pairwise distinct")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, mapping: Mapping) -> "PatternCoding":
        """Build from ``{word: symbol}``."""
        items = list(mapping.items())
        return cls(tuple(w for w, _ in items), tuple(v for _, v in items))

    def items(self):
        return zip(self.support, self.values)

    def to_dict(self) -> dict:
        return {"support": [format_word(w) for w in self.support], "values": list(self.values)}

    @classmethod
    def from_dict(cls, d: dict) -> "PatternCoding":
        return cls(tuple(d["support"]), tuple(d["values"]))

    def __len__(self):
        return len(self.support)


def is_consistent(c: PatternCoding, group: Group) -> bool:
    seen = {}
    for w, v in c.items():
        g = group.evaluate(w)
        if seen.setdefault(g, v) != v:
            return False
    return True


@dataclass(frozen=True)
class Pattern:
    """Element-indexed finite coloring; cells are kept in numbering order."""

    group: Group = field(compare=False, repr=False)
    cells: tuple

    @classmethod
    def from_mapping(cls, group: Group, mapping: Mapping | Iterable) -> "Pattern":
        items = dict(mapping)
        for g in items:
            if not group.is_element(g):
                raise ValueError(f"{g!r} is not an element of {group!r}")
        cells = tuple(sorted(items.items(), key=lambda kv: group.order_key(kv[0])))
        return cls(group, cells)

    @property
    def support(self) -> tuple:
        return tuple(g for g, _ in self.cells)

    @property
    def values(self) -> tuple:
        return tuple(v for _, v in self.cells)

    def as_dict(self) -> dict:
        return dict(self.cells)

    def __len__(self):
        return len(self.cells)

    def __getitem__(self, g):
        return self.as_dict()[g]

    def restrict(self, support: Iterable) -> "Pattern":
        keep = set(support)
        return Pattern(self.group, tuple(c for c in self.cells if c[0] in keep))

    def to_json(self) -> list:
        return [[self.group.element_to_json(g), v] for g, v in self.cells]


def realize(c: PatternCoding, group: Group) -> Pattern:
    cells = {}
    for w, v in c.items():
        g = group.evaluate(w)
        if cells.setdefault(g, v) != v:
            raise Inconsistent(f"words collide on {group.format_element(g)} with different symbols")
    return Pattern.from_mapping(group, cells)


def coding_of(p: Pattern) -> PatternCoding:
    """A coding whose realization is p, using the geodesic word of each cell."""
    return PatternCoding(tuple(p.group.word_of(g) for g in p.support), p.values)


def translate(p: Pattern, g) -> Pattern:
    G = p.group
    return Pattern.from_mapping(G, {G.mul(g, h): v for h, v in p.cells})


def occurrences(p: Pattern, q: Pattern):
    """Yield every g such that translate(p, g) sits inside q with matching values."""
    if not p.cells:
        yield p.group.identity()
        return
    G = p.group
    qd = q.as_dict()
    t0, v0 = p.cells[0]
    t0_inv = G.inv(t0)
    for s, vs in q.cells:
        if vs != v0:
            continue
        g = G.mul(s, t0_inv)
        if all(qd.get(G.mul(g, t)) == v for t, v in p.cells):
            yield g


def fits_inside(p: Pattern, q: Pattern) -> bool:
    return next(occurrences(p, q), None) is not None
