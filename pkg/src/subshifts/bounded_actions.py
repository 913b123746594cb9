"""Arrow-field SFTs encoding bounded actions of a group H on a group G.

A configuration y assigns to every g in G an arrow symbol: a map from the
generators of H into a finite set F of elements of G. Reading y(g)(s) as an
arrow g -> g * y(g)(s) lets words over H's generators walk through G. The
walk endpoint is ``Phi(g, y, w)``; the arrow SFT forbids every local pattern
along which a relator (or a cancelling pair s s^-1) fails to close up. The
overlay adds a symbol layer read along the walks, constrained by an H-SFT.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import SupportTooLarge, WindowEscape
from .groups import DirectProduct, FiniteGroup, FreeGroup, Group, IntegerLattice, parse_word
from .patterns import Pattern, PatternCoding
from .sft.constructions import pair, unpair
from .sft.presentation import SftPresentation


@dataclass(frozen=True)
class HPresentation:
    """Symmetric generators, their inverse names, and relators."""

    generators: tuple
    inverses: dict
    relators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(parse_word(r) for r in self.relators))
        for s in self.generators:
            if self.inverses.get(s) not in self.generators:
                raise ValueError(f"inverse of {s!r} is not a generator")
        for r in self.relators:
            for s in r:
                if s not in self.generators:
                    raise ValueError(f"relator uses unknown generator {s!r}")

    @classmethod
    def from_group(cls, H: Group) -> "HPresentation":
        gens = H.generators
        inverses = {s: H.inverse_name(s) for s in gens}
        return cls(gens, inverses, tuple(_standard_relators(H)))

    def enforced_words(self) -> list:
        """Relators plus every cancelling pair s s^-1."""
        words = list(self.relators)
        for s in self.generators:
            w = (s, self.inverses[s])
            if w not in words:
                words.append(w)
        return words

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "inverses": dict(self.inverses),
            "relators": [" ".join(r) for r in self.relators],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "HPresentation":
        return cls(tuple(d["generators"]), dict(d["inverses"]), tuple(d.get("relators", ())))


def _standard_relators(H: Group) -> list:
    if isinstance(H, FreeGroup):
        return []
    if isinstance(H, IntegerLattice):
        return [
            (f"x{i}", f"x{j}", f"x{i}-", f"x{j}-")
            for i in range(1, H.d + 1) for j in range(i + 1, H.d + 1)
        ]
    if isinstance(H, FiniteGroup):
        # multiplication-table presentation: word(a) s word(a s)^-1
        rels = []
        for a in H.enumerate():
            for s in H.generators:
                b = H.mul(a, H.generator(s))
                r = H.word_of(a) + (s,) + H.inverse_word(H.word_of(b))
                if r and r not in rels:
                    rels.append(r)
        return rels
    if isinstance(H, DirectProduct):
        rels = [tuple("L." + s for s in r) for r in _standard_relators(H.left)]
        rels += [tuple("R." + s for s in r) for r in _standard_relators(H.right)]
        for s in H.left.generators:
            for t in H.right.generators:
                rels.append(("L." + s, "R." + t, "L." + H.left.inverse_name(s), "R." + H.right.inverse_name(t)))
        return rels
    raise TypeError(f"no standard presentation for {H!r}")


@dataclass(frozen=True)
class ArrowAlphabet:
    """All maps from H's generators into F, numbered in product order.

    F is kept in the numbering order of G; symbol k is the k-th tuple of
    ``itertools.product(F, repeat=len(generators))``.
    """

    group: Group
    H: HPresentation
    F: tuple

    def __post_init__(self):
        F = sorted(set(self.F), key=self.group.order_key)
        if not F:
            raise ValueError("F must be nonempty")
        object.__setattr__(self, "F", tuple(F))

    @property
    def size(self) -> int:
        return len(self.F) ** len(self.H.generators)

    @property
    def symbols(self) -> tuple:
        return tuple(range(self.size))

    def decode(self, k: int) -> tuple:
        n = len(self.F)
        out = []
        for _ in self.H.generators:
            k, r = divmod(k, n)
            out.append(self.F[r])
        return tuple(reversed(out))

    def encode(self, arrows) -> int:
        if isinstance(arrows, dict):
            arrows = [arrows[s] for s in self.H.generators]
        pos = {f: i for i, f in enumerate(self.F)}
        k = 0
        for f in arrows:
            k = k * len(self.F) + pos[f]
        return k

    def arrow(self, k: int, s: str):
        return self.decode(k)[self.H.generators.index(s)]

    def matching(self, constraints: dict) -> list:
        """Symbols whose arrows agree with ``{generator: element}``."""
        choices = [
            [constraints[s]] if s in constraints else list(self.F) for s in self.H.generators
        ]
        return [self.encode(c) for c in itertools.product(*choices)]

    def to_dict(self) -> dict:
        return {
            "h": self.H.to_dict(),
            "F": [self.group.element_to_json(f) for f in self.F],
        }

    @classmethod
    def from_dict(cls, group: Group, d: dict) -> "ArrowAlphabet":
        return cls(group, HPresentation.from_dict(d["h"]), tuple(group.element_from_json(f) for f in d["F"]))


@dataclass(frozen=True)
class ArrowSft(SftPresentation):
    """An SFT whose symbols carry arrows (and optionally an overlaid layer).

    For overlays, ``layer`` is the overlaid alphabet and each symbol is
    ``pair(layer_symbol, arrow_symbol)``; otherwise symbols are arrow symbols.
    """

    arrows: ArrowAlphabet = field(default=None, compare=False)
    layer: tuple = field(default=None, compare=False)

    def arrow_of(self, symbol: int) -> int:
        if self.layer is None:
            return symbol
        return unpair(symbol)[1]

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["arrows"] = self.arrows.to_dict()
        if self.layer is not None:
            d["layer"] = list(self.layer)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ArrowSft":
        base = SftPresentation.from_dict(d)
        arrows = ArrowAlphabet.from_dict(base.group, d["arrows"])
        layer = tuple(d["layer"]) if "layer" in d else None
        return cls(base.group, base.alphabet, base.forbidden, arrows=arrows, layer=layer)


def evaluate_Phi(G: Group, arrows: ArrowAlphabet, g, y: dict, w, arrow_of=None):
    """Endpoint of the walk from g following the letters of w through y."""
    cur = g
    for s in parse_word(w):
        if cur not in y:
            raise WindowEscape(cur)
        sym = y[cur] if arrow_of is None else arrow_of(y[cur])
        cur = G.mul(cur, arrows.arrow(sym, s))
    return cur


def _walk_codings(G: Group, arrows: ArrowAlphabet, words, keep):
    """Enumerate arrow choices along the prefix tree of ``words`` from the identity.

    Yields ``(cells, ends)``: ``cells`` maps each visited cell to the arrow
    constraints it must satisfy, ``ends`` lists the endpoint of each word.
    ``keep(ends)`` filters which choices to yield.
    """
    edges = []
    prefixes = {(): 0}
    for w in words:
        for i in range(len(w)):
            p = tuple(w[: i + 1])
            if p not in prefixes:
                prefixes[p] = len(prefixes)
                edges.append((tuple(w[:i]), w[i], p))
    for choice in itertools.product(arrows.F, repeat=len(edges)):
        pos = {(): G.identity()}
        cells = {}
        ok = True
        for (parent, s, child), f in zip(edges, choice):
            c = pos[parent]
            need = cells.setdefault(c, {})
            if need.setdefault(s, f) != f:
                ok = False
                break
            pos[child] = G.mul(c, f)
        if not ok:
            continue
        ends = [pos[tuple(w)] for w in words]
        if keep(ends):
            yield cells, ends


def build_T(G: Group, H: HPresentation, F) -> ArrowSft:
    """Arrow SFT forbidding every walk of an enforced word that fails to close."""
    arrows = ArrowAlphabet(G, H, tuple(F))
    forbidden = []
    seen = set()
    for w in H.enforced_words():
        for cells, ends in _walk_codings(G, arrows, [w], lambda e: e[0] != G.identity()):
            order = sorted(cells, key=G.order_key)
            options = [arrows.matching(cells[c]) for c in order]
            support = tuple(G.word_of(c) for c in order)
            for vals in itertools.product(*options):
                key = (support, vals)
                if key not in seen:
                    seen.add(key)
                    forbidden.append(PatternCoding(support, vals))
    return ArrowSft(G, arrows.symbols, tuple(forbidden), arrows=arrows)


def build_TX(T_pres: ArrowSft, X: SftPresentation, radius_cap: int = 4) -> ArrowSft:
    """Overlay of T with a symbol layer whose readings along orbits avoid X's patterns.

    Symbols are ``pair(x_symbol, arrow_symbol)``.
    """
    G = T_pres.group
    arrows = T_pres.arrows
    Hgroup = X.group
    A = X.alphabet
    B = T_pres.alphabet
    alphabet = sorted(pair(a, b) for a in A for b in B)
    forbidden = []
    for c in T_pres.forbidden:
        for xs in itertools.product(A, repeat=len(c)):
            forbidden.append(PatternCoding(c.support, tuple(map(pair, xs, c.values))))
    for p in X.realized_forbidden():
        if not p.cells:
            forbidden.extend(PatternCoding(((),), (z,)) for z in alphabet)
            continue
        support = p.support
        diam = max(Hgroup.distance(a, b) for a in support for b in support)
        if diam > radius_cap:
            raise SupportTooLarge(f"forbidden pattern of diameter {diam} exceeds cap {radius_cap}")
        base_inv = Hgroup.inv(support[0])
        rel = [Hgroup.mul(base_inv, h) for h in support]
        words = [_h_word(Hgroup, arrows.H, h) for h in rel]
        seen = set()
        for cells, ends in _walk_codings(G, arrows, words, lambda e: True):
            reads = {}
            ok = True
            for e, v in zip(ends, p.values):
                if reads.setdefault(e, v) != v:
                    ok = False
                    break
            if not ok:
                continue
            order = sorted(set(cells) | set(reads), key=G.order_key)
            options = []
            for cell in order:
                arrow_opts = arrows.matching(cells.get(cell, {}))
                x_opts = [reads[cell]] if cell in reads else list(A)
                options.append([pair(a, b) for a in x_opts for b in arrow_opts])
            support_words = tuple(G.word_of(cell) for cell in order)
            for vals in itertools.product(*options):
                key = (support_words, vals)
                if key not in seen:
                    seen.add(key)
                    forbidden.append(PatternCoding(support_words, vals))
    return ArrowSft(G, tuple(alphabet), tuple(forbidden), arrows=arrows, layer=A)


def _h_word(Hgroup: Group, H: HPresentation, h) -> tuple:
    w = Hgroup.word_of(h)
    for s in w:
        if s not in H.generators:
            raise ValueError(f"generator {s!r} of X's group is not an H generator")
    return w


def validate_window(pres: SftPresentation, window: Pattern) -> bool:
    """True iff no forbidden pattern occurs inside the window."""
    G = pres.group
    values = window.as_dict()
    for support, valsets in pres.forbidden_shapes().items():
        if not support:
            return False
        t0_inv = G.inv(support[0])
        for w in values:
            g = G.mul(w, t0_inv)
            vals = []
            for t in support:
                h = G.mul(g, t)
                if h not in values:
                    break
                vals.append(values[h])
            else:
                if tuple(vals) in valsets:
                    return False
    return True


def overlay_window(pres: ArrowSft, cells, arrow_at, symbol_at=None) -> Pattern:
    """Window pattern from functions cell -> {generator: element} and cell -> layer symbol."""
    arrows = pres.arrows
    values = {}
    for c in cells:
        b = arrows.encode(arrow_at(c))
        values[c] = b if pres.layer is None else pair(symbol_at(c), b)
    return Pattern.from_mapping(pres.group, values)


__all__ = [
    "HPresentation", "ArrowAlphabet", "ArrowSft", "evaluate_Phi", "build_T", "build_TX",
    "validate_window", "overlay_window",
]
