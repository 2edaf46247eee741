"""Canonical representatives by brute force over vertex permutations.

To keep the search small, vertices are first split into cells by an
isomorphism-invariant refinement and only permutations that keep every cell
inside its own (canonically ordered) block of positions are tried.  The
minimum serialization over that restricted set is still a complete invariant,
because the restriction is itself defined invariantly.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Sequence

from .hypercore import ColoredGraph, Digraph, Hypergraph


def _rank(values: Sequence) -> list[int]:
    order = {val: i for i, val in enumerate(sorted(set(values)))}
    return [order[val] for val in values]


def _refine(n: int, init: Sequence, step: Callable[[list[int]], list]) -> list[int]:
    cur = _rank(init)
    while True:
        nxt = _rank([(cur[i], sig) for i, sig in enumerate(step(cur))])
        if len(set(nxt)) == len(set(cur)):
            return nxt
        cur = nxt


def _labelings(cells: list[int]):
    """Yield ``perm`` lists (0-based vertex -> 1-based position) that send each
    cell to its block of positions, cells ordered by rank."""
    n = len(cells)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(cells[v], []).append(v)
    blocks, start = [], 1
    for r in sorted(groups):
        members = groups[r]
        blocks.append((members, range(start, start + len(members))))
        start += len(members)
    for choice in product(*(permutations(pos) for _, pos in blocks)):
        perm = [0] * n
        for (members, _), ps in zip(blocks, choice):
            for v, p in zip(members, ps):
                perm[v] = p
        yield perm


@lru_cache(maxsize=None)
def canonical_hypergraph(G: Hypergraph) -> Hypergraph:
    if G.n == 0:
        return Hypergraph(0, tuple(sorted(G.edges)))
    incident = [[] for _ in range(G.n)]
    for e in G.edges:
        for v in e:
            incident[v - 1].append(e)
    init = [tuple(sorted(len(e) for e in incident[v])) for v in range(G.n)]

    def step(cur):
        return [tuple(sorted(tuple(sorted(cur[u - 1] for u in e)) for e in incident[v])) for v in range(G.n)]

    cells = _refine(G.n, init, step)
    best = None
    for perm in _labelings(cells):
        edges = tuple(sorted(tuple(sorted(perm[v - 1] for v in e)) for e in G.edges))
        if best is None or edges < best:
            best = edges
    return Hypergraph(G.n, best)


@lru_cache(maxsize=None)
def canonical_cgraph(G: ColoredGraph) -> ColoredGraph:
    adj = G.adjacency()
    init = [(G.colors[v - 1], len(adj[v])) for v in G.vertices()]

    def step(cur):
        return [tuple(sorted(cur[u - 1] for u in adj[v])) for v in G.vertices()]

    cells = _refine(G.n, init, step) if G.n else []
    best = None
    for perm in _labelings(cells):
        colors = [0] * G.n
        for v in range(G.n):
            colors[perm[v] - 1] = G.colors[v]
        edges = tuple(sorted(tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in G.edges))
        key = (tuple(colors), edges)
        if best is None or key < best:
            best = key
    return ColoredGraph(G.n, best[0], frozenset(best[1]))


@lru_cache(maxsize=None)
def canonical_digraph(G: Digraph) -> Digraph:
    out = [[] for _ in range(G.n + 1)]
    inn = [[] for _ in range(G.n + 1)]
    for u, v in G.arcs:
        out[u].append(v)
        inn[v].append(u)
    init = [((v, v) in G.arcs, len(out[v]), len(inn[v])) for v in G.vertices()]

    def step(cur):
        return [(tuple(sorted(cur[w - 1] for w in out[v])), tuple(sorted(cur[w - 1] for w in inn[v])))
                for v in G.vertices()]

    cells = _refine(G.n, init, step) if G.n else []
    best = None
    for perm in _labelings(cells):
        arcs = tuple(sorted((perm[u - 1], perm[v - 1]) for u, v in G.arcs))
        if best is None or arcs < best:
            best = arcs
    return Digraph(G.n, frozenset(best))


def canonical(x):
    if isinstance(x, Hypergraph):
        return canonical_hypergraph(x)
    if isinstance(x, ColoredGraph):
        return canonical_cgraph(x)
    if isinstance(x, Digraph):
        return canonical_digraph(x)
    raise TypeError(f"no canonical form for {type(x).__name__}")


def encoding(x) -> bytes:
    """Deterministic byte string; equal iff the inputs are isomorphic."""
    return json.dumps(canonical(x).to_json(), separators=(",", ":"), sort_keys=True).encode()
