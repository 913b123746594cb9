"""SFT and sofic presentations over a finitely generated group."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..groups import Group, format_word, group_from_dict, parse_word
from ..patterns import PatternCoding, is_consistent, realize


def _alphabet(symbols) -> tuple:
    symbols = tuple(int(a) for a in symbols)
    if not symbols:
        raise ValueError("alphabet must be nonempty")
    if len(set(symbols)) != len(symbols):
        raise ValueError("alphabet has duplicate symbols")
    if any(a < 0 for a in symbols):
        raise ValueError("symbols are natural numbers")
    return tuple(sorted(symbols))


@dataclass(frozen=True)
class SftPresentation:
    """A pair (alphabet, forbidden codings) over a group.

    Inconsistent forbidden codings are kept verbatim but never constrain
    anything, since their cylinder is empty.
    """

    group: Group
    alphabet: tuple
    forbidden: tuple = ()
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _alphabet(self.alphabet))
        forb = tuple(
            c if isinstance(c, PatternCoding) else PatternCoding.of(c) for c in self.forbidden
        )
        alph = set(self.alphabet)
        for c in forb:
            bad = [v for v in c.values if v not in alph]
            if bad:
                raise ValueError(f"forbidden value {bad[0]} not in alphabet")
            for w in c.support:
                for s in w:
                    self.group.generator(s)
        object.__setattr__(self, "forbidden", forb)

    def __hash__(self):
        return hash((self.alphabet, self.forbidden))

    def realized_forbidden(self) -> list:
        """The consistent forbidden codings, realized as patterns."""
        if "realized" not in self._cache:
            out = []
            for c in self.forbidden:
                if is_consistent(c, self.group):
                    out.append(realize(c, self.group))
            self._cache["realized"] = out
        return self._cache["realized"]

    def forbidden_shapes(self) -> dict:
        """Realized forbidden patterns grouped by support: support -> set of value tuples."""
        if "shapes" not in self._cache:
            shapes = {}
            for p in self.realized_forbidden():
                shapes.setdefault(p.support, set()).add(p.values)
            self._cache["shapes"] = {k: frozenset(v) for k, v in shapes.items()}
        return self._cache["shapes"]

    def max_support_radius(self) -> int:
        """Largest |g| over cells of realized forbidden patterns, after recentring
        each pattern on one of its own cells (the best choice)."""
        best = 0
        G = self.group
        for support in self.forbidden_shapes():
            if not support:
                continue
            r = min(max(G.distance(t, s) for s in support) for t in support)
            best = max(best, r)
        return best

    def to_dict(self) -> dict:
        return {
            "group": self.group.to_dict(),
            "alphabet": list(self.alphabet),
            "forbidden": [c.to_dict() for c in self.forbidden],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SftPresentation":
        group = group_from_dict(d["group"])
        return cls(group, tuple(d["alphabet"]), tuple(PatternCoding.from_dict(c) for c in d["forbidden"]))


@dataclass(frozen=True)
class SoficPresentation:
    """An SFT together with a sliding block map onto a target alphabet.

    ``local_map`` sends the tuple of base symbols read at ``g*w`` for each
    word w of ``local_support`` to the output symbol at g.
    """

    base: SftPresentation
    local_support: tuple
    local_map: dict
    target_alphabet: tuple = None

    def __post_init__(self):
        support = tuple(parse_word(w) for w in self.local_support)
        if not support:
            raise ValueError("local support must be nonempty")
        object.__setattr__(self, "local_support", support)
        mapping = {tuple(int(a) for a in k): int(v) for k, v in dict(self.local_map).items()}
        object.__setattr__(self, "local_map", mapping)
        for key in itertools.product(self.base.alphabet, repeat=len(support)):
            if key not in mapping:
                raise ValueError(f"local map undefined on {list(key)}")
        target = self.target_alphabet
        if target is None:
            target = sorted(set(mapping.values()))
        object.__setattr__(self, "target_alphabet", _alphabet(target))
        if not set(mapping.values()) <= set(self.target_alphabet):
            raise ValueError("local map leaves the target alphabet")

    @property
    def group(self) -> Group:
        return self.base.group

    def support_elements(self) -> tuple:
        return tuple(self.group.evaluate(w) for w in self.local_support)

    def apply(self, x: dict, g):
        """Output symbol at g for a configuration window x (element -> symbol)."""
        G = self.group
        key = tuple(x[G.mul(g, h)] for h in self.support_elements())
        return self.local_map[key]

    def to_dict(self) -> dict:
        d = self.base.to_dict()
        d["local_support"] = [format_word(w) for w in self.local_support]
        d["local_map"] = [[list(k), v] for k, v in sorted(self.local_map.items())]
        d["target_alphabet"] = list(self.target_alphabet)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SoficPresentation":
        base = SftPresentation.from_dict(d)
        mapping = {tuple(k): v for k, v in d["local_map"]}
        return cls(base, tuple(d["local_support"]), mapping, d.get("target_alphabet"))


def constant_coding(symbol: int, words) -> PatternCoding:
    words = tuple(parse_word(w) for w in words)
    return PatternCoding(words, (symbol,) * len(words))
