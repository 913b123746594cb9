"""Computable constructions on presentations: products, unions, pullbacks,
free extensions, and the two Rice-style reduction builders."""
from __future__ import annotations

import itertools

from ..errors import GroupMismatch, NotASubgroupEmbedding
from ..groups import FreeGroup, Group, IntegerLattice, parse_word
from ..patterns import PatternCoding
from .presentation import SftPresentation, SoficPresentation


def pair(a: int, b: int) -> int:
    """Cantor pairing N x N -> N."""
    return (a + b) * (a + b + 1) // 2 + b


def unpair(z: int) -> tuple:
    w = int(((8 * z + 1) ** 0.5 - 1) // 2)
    while w * (w + 1) // 2 > z:
        w -= 1
    while (w + 1) * (w + 2) // 2 <= z:
        w += 1
    b = z - w * (w + 1) // 2
    return w - b, b


def _same_group(*presentations):
    g = presentations[0].group
    for p in presentations[1:]:
        if p.group != g:
            raise GroupMismatch("presentations live on different groups")
    return g


def product(X: SftPresentation, Y: SftPresentation) -> SftPresentation:
    """Presentation of X x Y on the alphabet {pair(a, b)}."""
    G = _same_group(X, Y)
    alphabet = sorted(pair(a, b) for a in X.alphabet for b in Y.alphabet)
    forbidden = []
    for c in X.forbidden:
        for others in itertools.product(Y.alphabet, repeat=len(c)):
            forbidden.append(PatternCoding(c.support, tuple(map(pair, c.values, others))))
    for c in Y.forbidden:
        for others in itertools.product(X.alphabet, repeat=len(c)):
            forbidden.append(PatternCoding(c.support, tuple(map(pair, others, c.values))))
    return SftPresentation(G, tuple(alphabet), tuple(forbidden))


def tag_left(a: int) -> int:
    return 2 * a


def tag_right(b: int) -> int:
    return 2 * b + 1


def disjoint_union(X: SftPresentation, Y: SftPresentation) -> SftPresentation:
    """Presentation of X ⊔ Y: even symbols for X, odd for Y, never adjacent."""
    G = _same_group(X, Y)
    left = [tag_left(a) for a in X.alphabet]
    right = [tag_right(b) for b in Y.alphabet]
    forbidden = [PatternCoding(c.support, tuple(map(tag_left, c.values))) for c in X.forbidden]
    forbidden += [PatternCoding(c.support, tuple(map(tag_right, c.values))) for c in Y.forbidden]
    for s in G.generators:
        for a in left:
            for b in right:
                forbidden.append(PatternCoding(((), (s,)), (a, b)))
                forbidden.append(PatternCoding(((), (s,)), (b, a)))
    return SftPresentation(G, tuple(sorted(left + right)), tuple(forbidden))


def rice_reduction(X_plus: SftPresentation, X_minus: SftPresentation, input: SftPresentation) -> SftPresentation:
    """X_plus ⊔ (input x X_minus)."""
    _same_group(X_plus, X_minus, input)
    return disjoint_union(X_plus, product(input, X_minus))


def sofic_reduction(Y_plus: SoficPresentation, input: SftPresentation) -> SoficPresentation:
    """Base Y_plus.base x input; the map reads only the first coordinate."""
    _same_group(Y_plus.base, input)
    base = product(Y_plus.base, input)
    width = len(Y_plus.local_support)
    mapping = {}
    for key in itertools.product(base.alphabet, repeat=width):
        mapping[key] = Y_plus.local_map[tuple(unpair(z)[0] for z in key)]
    return SoficPresentation(base, Y_plus.local_support, mapping, Y_plus.target_alphabet)


# pullbacks to the free group on the generators


def generator_pairs(G: Group) -> list:
    """Generators grouped with their inverses, in declaration order."""
    pairs, seen = [], set()
    for s in G.generators:
        if s in seen:
            continue
        t = G.inverse_name(s)
        seen.update((s, t))
        pairs.append((s, t))
    return pairs


def pullback_names(G: Group) -> tuple:
    """(free group, map from G's generator names to free letters)."""
    pairs = generator_pairs(G)
    F = FreeGroup(len(pairs))
    names = {}
    for (s, t), letter in zip(pairs, F.letters):
        names[s] = letter
        if t != s:
            names[t] = letter + "-"
    return F, names


def _rename(c: PatternCoding, names: dict) -> PatternCoding:
    return PatternCoding(tuple(tuple(names[s] for s in w) for w in c.support), c.values)


def pullback_codings(X: SftPresentation, max_length: int | None = None):
    """Forbidden codings of the pullback over the free group, lazily.

    First X's own codings with letters renamed, then for every reduced
    nonempty free word w representing the identity of X's group (by
    increasing length) the codings {ε: a, w: b} with a != b.
    """
    G = X.group
    F, names = pullback_names(G)
    to_g = {}
    for s, letter in names.items():
        to_g[letter] = s
    for pr in generator_pairs(G):
        if pr[0] == pr[1]:
            to_g[names[pr[0]] + "-"] = pr[0]
    for c in X.forbidden:
        yield _rename(c, names)
    lengths = itertools.count(1) if max_length is None else range(1, max_length + 1)
    frontier = [()]
    for _ in lengths:
        nxt = []
        for w in frontier:
            for s in F.generators:
                if w and F.inverse_name(w[-1]) == s:
                    continue
                nxt.append(w + (s,))
        frontier = nxt
        for w in frontier:
            if G.word_problem(tuple(to_g[s] for s in w)):
                for a in X.alphabet:
                    for b in X.alphabet:
                        if a != b:
                            yield PatternCoding(((), w), (a, b))


def pullback_to_free(X: SftPresentation, relator_length: int = 4) -> SftPresentation:
    """The pullback with identity-word constraints truncated at ``relator_length``."""
    F, _ = pullback_names(X.group)
    return SftPresentation(F, X.alphabet, tuple(pullback_codings(X, relator_length)))


# free extensions


def default_embedding(H: Group, G: Group) -> dict:
    if H == G:
        return {s: s for s in H.generators}
    if isinstance(H, IntegerLattice) and isinstance(G, IntegerLattice) and H.d <= G.d:
        return {s: s for s in H.generators}
    if isinstance(H, FreeGroup) and isinstance(G, FreeGroup) and H.rank <= G.rank:
        return {s: s for s in H.generators}
    if isinstance(H, IntegerLattice) and H.d == 1 and isinstance(G, FreeGroup):
        return {"x1": "a", "x1-": "a-"}
    raise NotASubgroupEmbedding(f"no standard embedding of {H!r} into {G!r}")


def _check_embedding(H: Group, G: Group, emb: dict):
    if set(emb) != set(H.generators):
        raise NotASubgroupEmbedding("embedding must name every generator of H")
    for s, t in emb.items():
        if t not in G.generators:
            raise NotASubgroupEmbedding(f"{t!r} is not a generator of the target group")
        if emb[H.inverse_name(s)] != G.inverse_name(t):
            raise NotASubgroupEmbedding(f"embedding does not respect the inverse of {s!r}")
    if len(set(emb.values())) != len(emb):
        raise NotASubgroupEmbedding("embedding identifies two generators")
    if H == G:
        return
    ok = (
        (isinstance(H, IntegerLattice) and isinstance(G, IntegerLattice))
        or (isinstance(H, FreeGroup) and isinstance(G, FreeGroup))
        or (isinstance(H, IntegerLattice) and H.d == 1 and isinstance(G, FreeGroup))
    )
    if not ok:
        raise NotASubgroupEmbedding("unsupported pair of groups")


def free_extension(X: SftPresentation, G: Group, embedding: dict | None = None) -> SftPresentation:
    """X's forbidden codings read over G through a generator embedding."""
    H = X.group
    emb = default_embedding(H, G) if embedding is None else dict(embedding)
    _check_embedding(H, G, emb)
    forbidden = tuple(
        PatternCoding(tuple(tuple(emb[s] for s in parse_word(w)) for w in c.support), c.values)
        for c in X.forbidden
    )
    return SftPresentation(G, X.alphabet, forbidden)


def image_language(Y: SoficPresentation, n: int, m: int = 0, max_patterns: int = 10**6) -> tuple:
    """Images on B_n of the locally admissible base patterns, sorted."""
    from .language import locally_admissible_on

    G = Y.group
    r = max(len(w) for w in Y.local_support)
    inner = G.ball(n).elements
    lang = locally_admissible_on(Y.base, G.ball(n + r).elements, G.ball(n + r + m).elements, max_patterns)
    images = set()
    for vals in lang.patterns:
        x = dict(zip(lang.support, vals))
        images.add(tuple(Y.apply(x, g) for g in inner))
    return tuple(sorted(images))


__all__ = [
    "pair", "unpair", "product", "disjoint_union", "rice_reduction", "sofic_reduction",
    "pullback_codings", "pullback_to_free", "pullback_names", "free_extension", "image_language",
]
