"""Greedy computable configurations for nearest-neighbour SFTs on free groups."""
from __future__ import annotations

from ..errors import NotNearestNeighbor
from ..groups import FreeGroup
from ..patterns import Pattern
from .presentation import SftPresentation


class _Empty:
    """Returned when no configuration exists."""

    def __repr__(self):
        return "Empty"

    def __bool__(self):
        return False


Empty = _Empty()


def nearest_neighbor_rules(X: SftPresentation):
    """(symbols forbidden outright, forbidden triples (a, s, b) meaning a at g, b at g*s)."""
    F = X.group
    if not isinstance(F, FreeGroup):
        raise NotNearestNeighbor("greedy configurations are built on free groups")
    banned, triples = set(), set()
    for p in X.realized_forbidden():
        cells = p.cells
        if len(cells) == 1:
            banned.add(cells[0][1])
            continue
        if len(cells) != 2:
            raise NotNearestNeighbor(f"support of size {len(cells)} is not nearest-neighbour")
        (g, a), (h, b) = cells
        step = F.mul(F.inv(g), h)
        if len(step) != 1:
            raise NotNearestNeighbor("two-cell support whose cells are not adjacent")
        s = F.word_of(step)[0]
        triples.add((a, s, b))
        triples.add((b, F.inverse_name(s), a))
    if any(len(p.cells) == 0 for p in X.realized_forbidden()):
        banned.update(X.alphabet)
    return banned, triples


def arc_consistent_alphabet(X: SftPresentation) -> list:
    """Largest A' such that every symbol of A' has an allowed A'-neighbour in each direction."""
    F = X.group
    banned, triples = nearest_neighbor_rules(X)
    alive = [a for a in X.alphabet if a not in banned]
    changed = True
    while changed:
        changed = False
        for a in list(alive):
            if any(all((a, s, b) in triples for b in alive) for s in F.generators):
                alive.remove(a)
                changed = True
    return alive


def greedy_free_configuration(X: SftPresentation, n: int):
    """The greedy configuration on B_n, or ``Empty`` when the SFT is empty.

    x(1) = min A'; each g = h*s on the next sphere takes the least symbol of
    A' compatible with x(h) across the edge labelled s.
    """
    F = X.group
    alive = arc_consistent_alphabet(X)
    if not alive:
        return Empty
    _, triples = nearest_neighbor_rules(X)
    x = {F.identity(): alive[0]}
    for g in F.ball(n).elements[1:]:
        h = g[:-1]
        s = F.word_of(g[-1:])[0]
        xh = x[h]
        x[g] = next(b for b in alive if (xh, s, b) not in triples)
    return Pattern.from_mapping(F, x)
