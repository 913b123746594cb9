"""Complete decisions for SFTs over Z via the window graph.

A Z-SFT whose forbidden patterns have diameter below k is the set of
bi-infinite walks in the graph whose vertices are the allowed words of
length k, with an edge u -> v whenever u and v overlap in k-1 symbols.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..errors import GroupMismatch
from ..groups import IntegerLattice
from .presentation import SftPresentation

POWER_TOL = 1e-12
POWER_MAX_ITER = 200_000


def _require_z(X: SftPresentation):
    G = X.group
    if not (isinstance(G, IntegerLattice) and G.d == 1):
        raise GroupMismatch("this procedure needs the group Z")


def normalized_forbidden(X: SftPresentation) -> list:
    """Forbidden patterns as (offsets from 0, values), offsets ascending."""
    out = []
    for p in X.realized_forbidden():
        cells = sorted((g[0], v) for g, v in p.cells)
        if not cells:
            out.append(((), ()))
            continue
        base = cells[0][0]
        out.append((tuple(c - base for c, _ in cells), tuple(v for _, v in cells)))
    return out


def _spectral_radius(adj: np.ndarray) -> float:
    """Largest eigenvalue of a nonnegative matrix, via strong components.

    On each nontrivial strong component, power iteration runs on A + I (which
    is primitive there) and stops once the Collatz-Wielandt bounds agree to
    POWER_TOL. A dense eigenvalue solve is the fallback if that stalls.
    """
    n = adj.shape[0]
    if n == 0:
        return 0.0
    ncomp, labels = connected_components(csr_matrix(adj), directed=True, connection="strong")
    best = 0.0
    for c in range(ncomp):
        idx = np.flatnonzero(labels == c)
        sub = adj[np.ix_(idx, idx)]
        if len(idx) == 1:
            best = max(best, float(sub[0, 0]))
            continue
        M = sub + np.eye(len(idx))
        v = np.ones(len(idx))
        rho = None
        for _ in range(POWER_MAX_ITER):
            w = M @ v
            ratios = w / v
            lo, hi = ratios.min(), ratios.max()
            v = w / w.max()
            if hi - lo <= POWER_TOL * hi:
                rho = 0.5 * (lo + hi) - 1.0
                break
        if rho is None:
            rho = float(max(abs(np.linalg.eigvals(sub))))
        best = max(best, rho)
    return best


@dataclass
class ZDecision:
    window: int
    alphabet: tuple
    vertices: list
    successors: dict
    empty: bool
    entropy: float
    _lang_cache: dict = field(default_factory=dict, repr=False)

    def words(self, length: int) -> tuple:
        """All words of the given length occurring in the subshift, sorted."""
        if length in self._lang_cache:
            return self._lang_cache[length]
        k = self.window
        if self.empty:
            out = ()
        elif length == 0:
            out = ((),)
        elif length <= k:
            out = tuple(sorted({v[:length] for v in self.vertices}))
        else:
            # words of length k + j ending at each vertex
            ending = {v: {v} for v in self.vertices}
            for _ in range(length - k):
                nxt = {v: set() for v in self.vertices}
                for u, ws in ending.items():
                    for v in self.successors[u]:
                        nxt[v].update(w + v[-1:] for w in ws)
                ending = nxt
            out = tuple(sorted(set().union(*ending.values())))
        self._lang_cache[length] = out
        return out

    def language(self, n: int) -> tuple:
        """The exact L_n: words on the ball [-n, n]."""
        return self.words(2 * n + 1)

    def periodic_word(self) -> tuple:
        """One period of a periodic point (empty tuple if the subshift is empty)."""
        if self.empty:
            return ()
        v = self.vertices[0]
        seen = {}
        path = []
        while v not in seen:
            seen[v] = len(path)
            path.append(v)
            v = self.successors[v][0]
        cycle = path[seen[v]:]
        return tuple(u[0] for u in cycle)


def z_decide(X: SftPresentation) -> ZDecision:
    _require_z(X)
    A = X.alphabet
    forb = normalized_forbidden(X)
    if any(not offs for offs, _ in forb):
        return ZDecision(1, A, [], {}, True, float("-inf"))
    k = max([offs[-1] for offs, _ in forb], default=0) + 1

    # forbidden patterns grouped by their last offset, for incremental checks
    by_end = {}
    for offs, vals in forb:
        by_end.setdefault(offs[-1], []).append((offs, vals))

    def ok_at_end(word):
        end = len(word) - 1
        for last, pats in by_end.items():
            start = end - last
            if start < 0:
                continue
            for offs, vals in pats:
                if all(word[start + o] == v for o, v in zip(offs, vals)):
                    return False
        return True

    words = [()]
    for _ in range(k):
        words = [w + (a,) for w in words for a in A if ok_at_end(w + (a,))]
    alive = set(words)
    # prune vertices with no predecessor or no successor until stable
    while True:
        suffixes = {w[1:] for w in alive}
        prefixes = {w[:-1] for w in alive}
        keep = {w for w in alive if w[:-1] in suffixes and w[1:] in prefixes}
        if keep == alive:
            break
        alive = keep
    vertices = sorted(alive)
    by_prefix = {}
    for v in vertices:
        by_prefix.setdefault(v[:-1], []).append(v)
    successors = {v: by_prefix.get(v[1:], []) for v in vertices}
    if not vertices:
        return ZDecision(k, A, [], {}, True, float("-inf"))
    index = {v: i for i, v in enumerate(vertices)}
    adj = np.zeros((len(vertices), len(vertices)))
    for v, succ in successors.items():
        for u in succ:
            adj[index[v], index[u]] = 1.0
    rho = _spectral_radius(adj)
    return ZDecision(k, A, vertices, successors, False, math.log(rho))


def subshift_distance(X: SftPresentation, Y: SftPresentation) -> float:
    """inf {2^-n : L_n(X) = L_n(Y)}, with 2 when even L_0 differs.

    Both subshifts are determined by their words of length K (the larger
    window), so agreement up to radius ceil((K-1)/2) means equality and the
    distance is 0.
    """
    _require_z(X)
    _require_z(Y)
    dx, dy = z_decide(X), z_decide(Y)
    K = max(dx.window, dy.window)
    n0 = math.ceil((K - 1) / 2)
    for n in range(n0 + 1):
        if dx.language(n) != dy.language(n):
            return 2.0 if n == 0 else 2.0 ** (-(n - 1))
    return 0.0
