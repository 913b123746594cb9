"""Brute-force reference computations, deliberately independent of the solver."""
import itertools
import math
import random

from subshifts.groups import IntegerLattice
from subshifts.patterns import PatternCoding, realize
from subshifts.sft import SftPresentation

Z = IntegerLattice(1)
Z2 = IntegerLattice(2)


def occurs(G, forbidden_patterns, config):
    """True iff some translate of a forbidden pattern lies inside ``config``."""
    for p in forbidden_patterns:
        cells = p.as_dict()
        if not cells:
            return True
        items = list(cells.items())
        t0_inv = G.inv(items[0][0])
        for w in config:
            g = G.mul(w, t0_inv)
            if all(config.get(G.mul(g, t)) == v for t, v in items):
                return True
    return False


def brute_valid_colorings(X, window):
    window = list(window)
    pats = [realize(c, X.group) for c in X.forbidden]
    for vals in itertools.product(X.alphabet, repeat=len(window)):
        config = dict(zip(window, vals))
        if not occurs(X.group, pats, config):
            yield config


def brute_loc(X, n, m=0):
    G = X.group
    inner = list(G.ball(n))
    window = list(G.ball(n + m))
    return {tuple(c[g] for g in inner) for c in brute_valid_colorings(X, window)}


def brute_fixed_points(X):
    """Symbols whose constant colouring of a ball wide enough to hold every forbidden pattern is clean."""
    G = X.group
    pats = [realize(c, G) for c in X.forbidden]
    radius = max((G.length(g) for p in pats for g in p.support), default=0)
    ball = list(G.ball(2 * radius))
    return [a for a in X.alphabet if not occurs(G, pats, {g: a for g in ball})]


def golden(G=Z, d_gen="x1"):
    return SftPresentation(G, (0, 1), (PatternCoding(((), (d_gen,)), (1, 1)),))


def full_shift(G=Z, k=2):
    return SftPresentation(G, tuple(range(k)), ())


def checkerboard_contradiction():
    """The criterion SFT: equal horizontal/vertical neighbours and unequal diagonals forbidden."""
    forb = []
    for s in ("x1", "x2"):
        for a in (0, 1):
            forb.append(PatternCoding(((), (s,)), (a, a)))
    for diag in (("x1", "x2"), ("x1", "x2-")):
        for a, b in ((0, 1), (1, 0)):
            forb.append(PatternCoding(((), diag), (a, b)))
    return SftPresentation(Z2, (0, 1), tuple(forb))


def random_sft(rng: random.Random, G, k=None, n_forbidden=None, max_cells=2, spread=1):
    """Random presentation with supports inside the ball of radius ``spread``."""
    k = k or rng.randint(1, 3)
    A = tuple(range(k))
    ball = list(G.ball(spread))
    forb = []
    for _ in range(n_forbidden if n_forbidden is not None else rng.randint(0, 4)):
        size = rng.randint(1, max_cells)
        cells = rng.sample(ball, min(size, len(ball)))
        forb.append(PatternCoding(tuple(G.word_of(c) for c in cells), tuple(rng.choice(A) for _ in cells)))
    return SftPresentation(G, A, tuple(forb))


def golden_ratio_entropy():
    return math.log((1 + math.sqrt(5)) / 2)
