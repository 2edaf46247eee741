"""Tensor products, transitive tournaments and homomorphism counts of digraphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_digraph
from .hypercore import Digraph


def tensor_product(G: Digraph, H: Digraph) -> Digraph:
    """Vertex ``(u, x)`` is numbered ``(u-1)*|V(H)| + x``; arcs need arcs in both factors."""
    def idx(u, x):
        return (u - 1) * H.n + x

    arcs = frozenset((idx(u, x), idx(v, y)) for u, v in G.arcs for x, y in H.arcs)
    return Digraph(G.n * H.n, arcs)


def transitive_tournament(n: int) -> Digraph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Digraph(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))


@lru_cache(maxsize=None)
def count_dihom(F: Digraph, G: Digraph) -> int:
    """Arc-preserving vertex maps ``F -> G``, by backtracking."""
    out = [[] for _ in range(F.n + 1)]
    inn = [[] for _ in range(F.n + 1)]
    for u, v in F.arcs:
        out[u].append(v)
        inn[v].append(u)
    h = [0] * (F.n + 1)
    arcs = G.arcs

    def rec(t):
        if t > F.n:
            return 1
        total = 0
        for x in G.vertices():
            h[t] = x
            if all(w > t or (x, h[w]) in arcs for w in out[t]) and \
               all(w > t or (h[w], x) in arcs for w in inn[t]):
                total += rec(t + 1)
        return total

    return rec(1)


def longest_path_arcs(G: Digraph) -> int | None:
    """Arcs on a longest directed path, or ``None`` if ``G`` has a cycle (loops included)."""
    indeg = [0] * (G.n + 1)
    out = [[] for _ in range(G.n + 1)]
    for u, v in G.arcs:
        out[u].append(v)
        indeg[v] += 1
    depth = [0] * (G.n + 1)
    ready = [v for v in G.vertices() if indeg[v] == 0]
    done = 0
    while ready:
        u = ready.pop()
        done += 1
        for v in out[u]:
            depth[v] = max(depth[v], depth[u] + 1)
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    if done < G.n:
        return None
    return max(depth[1:], default=0)


def in_A_n(G: Digraph, n: int) -> bool:
    return count_dihom(G, transitive_tournament(n)) > 0


def in_A_n_by_paths(G: Digraph, n: int) -> bool:
    """Acyclic with every directed path shorter than ``n`` arcs."""
    if G.n == 0:
        return True
    lp = longest_path_arcs(G)
    return lp is not None and lp < n


def check_multiplicativity(F: Digraph, G: Digraph, H: Digraph) -> bool:
    return count_dihom(F, tensor_product(G, H)) == count_dihom(F, G) * count_dihom(F, H)


def random_digraph(rng: random.Random, max_v: int) -> Digraph:
    n = rng.randint(1, max_v)
    arcs = frozenset((u, v) for u in range(1, n + 1) for v in range(1, n + 1) if rng.random() < 0.4)
    return Digraph(n, arcs)


def is_isomorphic_digraph(G: Digraph, H: Digraph) -> bool:
    return canonical_digraph(G) == canonical_digraph(H)


@dataclass
class A3Report:
    isomorphic: bool
    witness: Digraph | None
    counts: tuple[int, int] | None
    status: str  # "separated", "no_witness", "budget_exhausted", "inconsistent"

    @property
    def ok(self) -> bool:
        return self.status in ("separated", "no_witness")


def distinguish_by_A3(G: Digraph, H: Digraph, max_pattern_v: int = 4) -> A3Report:
    """Look for a pattern in A_3 with at most ``max_pattern_v`` vertices whose
    homomorphism counts into ``G`` and ``H`` differ (ascending family order)."""
    from .enumeration import enum_dags_A3

    iso = is_isomorphic_digraph(G, H)
    for F in enum_dags_A3(max_pattern_v):
        a, b = count_dihom(F, G), count_dihom(F, H)
        if a != b:
            return A3Report(iso, F, (a, b), "inconsistent" if iso else "separated")
    return A3Report(iso, None, None, "no_witness" if iso else "budget_exhausted")
