"""Isomorph-free generation of the instance families the verifiers sweep.

Every generator produces candidates, maps each to its canonical
representative and keeps one per class.  Families are tuples ordered by
``(weight, encoding)`` where weight is ``|V| + |E|`` (``|V| + |arcs|`` for
digraphs); the encoding breaks ties deterministically.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

import networkx as nx

from .canon import canonical, encoding
from .hypercore import ColoredGraph, Digraph, Hypergraph, is_berge_acyclic, is_connected

Family = tuple


def weight(x) -> int:
    if isinstance(x, Hypergraph):
        return x.n + x.m
    if isinstance(x, Digraph):
        return x.n + len(x.arcs)
    return x.n + len(x.edges)


def family_key(x) -> tuple[int, bytes]:
    return weight(x), encoding(x)


def make_family(items) -> Family:
    """Canonicalize, drop isomorphic duplicates, sort by ``family_key``."""
    reps = {canonical(x) for x in items}
    return tuple(sorted(reps, key=family_key))


def _free_trees(order: int):
    if order == 1:
        yield []
        return
    for t in nx.nonisomorphic_trees(order):
        yield list(t.edges())


def _tree_to_hypergraphs(order: int, tree_edges):
    adj = [[] for _ in range(order)]
    for a, b in tree_edges:
        adj[a].append(b)
        adj[b].append(a)
    side = [-1] * order
    side[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if side[w] < 0:
                side[w] = 1 - side[u]
                stack.append(w)
    for vertex_side in (0, 1):
        vs = [x for x in range(order) if side[x] == vertex_side]
        es = [x for x in range(order) if side[x] != vertex_side]
        if any(not adj[x] for x in es):
            continue  # an edge node without members would be an empty edge
        vid = {x: i for i, x in enumerate(vs, 1)}
        yield Hypergraph(len(vs), tuple(tuple(sorted(vid[y] for y in adj[x])) for x in es))


@lru_cache(maxsize=None)
def enum_ba_weight(w: int) -> Family:
    """Connected Berge-acyclic hypergraphs with ``|V| + |E| == w``.

    Their incidence graphs are exactly the free trees on ``w`` nodes with one
    of the two sides of the bipartition declared to be edges.
    """
    found = []
    for tree in _free_trees(w):
        found.extend(_tree_to_hypergraphs(w, tree))
    return make_family(found)


@lru_cache(maxsize=None)
def enum_ba(max_weight: int) -> Family:
    """Connected Berge-acyclic hypergraphs with ``|V| + |E| <= max_weight``."""
    return tuple(B for w in range(1, max_weight + 1) for B in enum_ba_weight(w))


@lru_cache(maxsize=None)
def enum_ba_m_n(m: int, n: int) -> Family:
    """Connected Berge-acyclic hypergraphs with exactly ``m`` edges, none larger than ``n``."""
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    return tuple(B for B in enum_ba(m * n + m + 1)
                 if B.m == m and all(len(e) <= n for e in B.edges))


@lru_cache(maxsize=None)
def enum_hypergraphs(max_v: int, max_e: int, max_edge_size: int,
                     simple_only: bool = False, connected_only: bool = False) -> Family:
    """All hypergraphs on ``1..max_v`` vertices with at most ``max_e`` edges of
    size at most ``max_edge_size``, by generate-and-canonicalize."""
    found = []
    for n in range(1, max_v + 1):
        subsets = [c for k in range(1, min(max_edge_size, n) + 1)
                   for c in combinations(range(1, n + 1), k)]
        pick = combinations if simple_only else combinations_with_replacement
        for m in range(max_e + 1):
            for edges in pick(subsets, m):
                G = Hypergraph(n, edges)
                if connected_only and not is_connected(G):
                    continue
                found.append(G)
    return make_family(found)


@lru_cache(maxsize=None)
def enum_connected(m: int, max_edge_size: int, max_v: int) -> Family:
    """Connected hypergraphs with exactly ``m`` edges, edge size at most
    ``max_edge_size`` and at most ``max_v`` vertices.

    Grows edge by edge; every new edge meets the current vertex set and may
    bring fresh vertices, which reaches every connected hypergraph through a
    breadth-first edge order.
    """
    if m == 0:
        return (Hypergraph(1, ()),) if max_v >= 1 else ()
    level = {canonical(Hypergraph(a, (tuple(range(1, a + 1)),)))
             for a in range(1, min(max_edge_size, max_v) + 1)}
    for _ in range(m - 1):
        nxt = set()
        for G in level:
            old = range(1, G.n + 1)
            for k in range(1, min(max_edge_size, G.n) + 1):
                for S in combinations(old, k):
                    for t in range(0, min(max_edge_size - k, max_v - G.n) + 1):
                        e = S + tuple(range(G.n + 1, G.n + t + 1))
                        nxt.add(canonical(Hypergraph(G.n + t, G.edges + (e,))))
        level = nxt
    return tuple(sorted(level, key=family_key))


@lru_cache(maxsize=None)
def enum_digraphs(n: int, loops: bool = True) -> Family:
    """All digraphs on ``1..n`` vertices, up to isomorphism."""
    found = []
    for k in range(1, n + 1):
        pairs = [(u, v) for u in range(1, k + 1) for v in range(1, k + 1) if loops or u != v]
        for bits in product((0, 1), repeat=len(pairs)):
            found.append(Digraph(k, frozenset(p for p, b in zip(pairs, bits) if b)))
    return make_family(found)


@lru_cache(maxsize=None)
def enum_dags_A3(max_v: int) -> Family:
    """Digraphs on at most ``max_v`` vertices that map into the transitive
    tournament on three vertices."""
    from .digraphs import in_A_n
    return tuple(D for D in enum_digraphs(max_v) if in_A_n(D, 3))


@lru_cache(maxsize=None)
def enum_cgraphs(max_v: int, num_colors: int) -> Family:
    """Vertex-colored simple graphs with colors drawn from ``1..num_colors``."""
    found = []
    for n in range(1, max_v + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        for bits in product((0, 1), repeat=len(pairs)):
            edges = frozenset(p for p, b in zip(pairs, bits) if b)
            for colors in product(range(1, num_colors + 1), repeat=n):
                found.append(ColoredGraph(n, colors, edges))
    return make_family(found)


@lru_cache(maxsize=None)
def enum_colored_trees(max_v: int, num_colors: int) -> Family:
    found = []
    for order in range(1, max_v + 1):
        for tree in _free_trees(order):
            edges = frozenset((a + 1, b + 1) for a, b in tree)
            for colors in product(range(1, num_colors + 1), repeat=order):
                found.append(ColoredGraph(order, colors, edges))
    return make_family(found)


def is_ba_family(fam) -> bool:
    return all(is_connected(B) and is_berge_acyclic(B) for B in fam)


__all__ = [
    "Family", "weight", "family_key", "make_family", "enum_ba", "enum_ba_weight", "enum_ba_m_n", "enum_hypergraphs",
    "enum_connected", "enum_digraphs", "enum_dags_A3", "enum_cgraphs", "enum_colored_trees",
]
