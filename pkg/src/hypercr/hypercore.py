"""Hypergraphs, vertex-colored graphs and digraphs, plus the structural
constructors used throughout the package.

Vertices are always the integers ``1..n``.  A hypergraph's edges are kept as
an ordered tuple; an edge is identified by its position, so parallel edges are
distinct objects.  All values are frozen and hashable, which lets the counting
and refinement layers memoize on them.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Any, Iterable, Sequence


class InstanceError(ValueError):
    """Raised for malformed instances (bad ids, empty edges, loops, ...)."""


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InstanceError(f"vertex count must be a non-negative integer, got {self.n!r}")
        edges = []
        for j, e in enumerate(self.edges):
            e = tuple(e)
            if not e:
                raise InstanceError(f"edge {j} is empty")
            for v in e:
                if not isinstance(v, int) or not 1 <= v <= self.n:
                    raise InstanceError(f"edge {j} has vertex {v!r} outside 1..{self.n}")
            if any(a >= b for a, b in zip(e, e[1:])):
                if len(set(e)) != len(e):
                    raise InstanceError(f"edge {j} repeats a vertex")
                e = tuple(sorted(e))
            edges.append(e)
        object.__setattr__(self, "edges", tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weight(self) -> int:
        return self.n + len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def incident(self, v: int) -> list[int]:
        """Indices of the edges containing ``v``."""
        return [j for j, e in enumerate(self.edges) if v in e]

    def leaves(self) -> frozenset[int]:
        """Vertices lying in exactly one edge, parallel edges counted separately."""
        deg = Counter(v for e in self.edges for v in e)
        return frozenset(v for v in self.vertices() if deg[v] == 1)

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Apply the vertex bijection ``v -> perm[v-1]``."""
        return Hypergraph(self.n, tuple(tuple(sorted(perm[v - 1] for v in e)) for e in self.edges))

    def to_json(self) -> dict:
        return {"type": "hypergraph", "n": self.n, "edges": [list(e) for e in self.edges]}

    def __str__(self):
        return f"Hypergraph(n={self.n}, edges={[list(e) for e in self.edges]})"


@dataclass(frozen=True)
class ColoredGraph:
    n: int
    colors: tuple[int, ...]
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InstanceError(f"vertex count must be a non-negative integer, got {self.n!r}")
        colors = tuple(self.colors)
        if len(colors) != self.n:
            raise InstanceError(f"expected {self.n} colors, got {len(colors)}")
        if any(not isinstance(c, int) or c < 1 for c in colors):
            raise InstanceError("colors must be positive integers")
        edges = set()
        for uv in self.edges:
            u, v = uv
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InstanceError(f"edge {uv!r} has an endpoint outside 1..{self.n}")
            if u == v:
                raise InstanceError(f"self-loop at {u}")
            edges.add((min(u, v), max(u, v)))
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "edges", frozenset(edges))

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacency(self) -> list[list[int]]:
        """0-padded adjacency lists: ``adj[v]`` for ``v`` in ``1..n``."""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in sorted(self.edges):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def is_connected(self) -> bool:
        return self.n > 0 and len(_components(self.n, self.edges)) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == self.n - 1

    def relabel(self, perm: Sequence[int]) -> "ColoredGraph":
        colors = [0] * self.n
        for v in self.vertices():
            colors[perm[v - 1] - 1] = self.colors[v - 1]
        return ColoredGraph(self.n, tuple(colors), frozenset((perm[u - 1], perm[v - 1]) for u, v in self.edges))

    def to_json(self) -> dict:
        return {"type": "cgraph", "n": self.n, "colors": list(self.colors),
                "edges": [list(e) for e in sorted(self.edges)]}


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InstanceError(f"vertex count must be a non-negative integer, got {self.n!r}")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InstanceError(f"arc {(u, v)!r} has an endpoint outside 1..{self.n}")
        object.__setattr__(self, "arcs", arcs)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.arcs)

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        return Digraph(self.n, frozenset((perm[u - 1], perm[v - 1]) for u, v in self.arcs))

    def to_json(self) -> dict:
        return {"type": "digraph", "n": self.n, "arcs": [list(a) for a in sorted(self.arcs)]}


DegreeSequence = tuple[int, ...]


def _components(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


# -- constructors -----------------------------------------------------------

def incidence_graph(G: Hypergraph) -> ColoredGraph:
    """Colored incidence graph: vertices of ``G`` get color 1, edge ``j`` becomes
    vertex ``n+j+1`` with color 2."""
    colors = (1,) * G.n + (2,) * G.m
    adj = frozenset((v, G.n + j + 1) for j, e in enumerate(G.edges) for v in e)
    return ColoredGraph(G.n + G.m, colors, adj)


def from_incidence_graph(T: ColoredGraph) -> Hypergraph:
    """Inverse of :func:`incidence_graph` up to vertex/edge numbering.

    Color-1 vertices become hypergraph vertices (in order), color-2 vertices
    become edges.  Fails when ``T`` is not a properly 2-colored bipartite graph
    or has an isolated color-2 vertex (an empty edge).
    """
    if any(c not in (1, 2) for c in T.colors):
        raise InstanceError("incidence graphs use colors 1 and 2 only")
    vid = {}
    for v in T.vertices():
        if T.colors[v - 1] == 1:
            vid[v] = len(vid) + 1
    adj = T.adjacency()
    if any(T.colors[a - 1] == T.colors[b - 1] for a, b in T.edges):
        raise InstanceError("incidence graphs only join a color-1 vertex to a color-2 vertex")
    edges = []
    for v in T.vertices():
        if T.colors[v - 1] == 2:
            if not adj[v]:
                raise InstanceError(f"isolated color-2 vertex {v} has no hypergraph preimage")
            edges.append(tuple(sorted(vid[u] for u in adj[v])))
    return Hypergraph(len(vid), tuple(edges))


def is_connected(G: Hypergraph) -> bool:
    if G.n == 0:
        return False
    return len(_components(G.n + G.m, incidence_graph(G).edges)) == 1


def is_berge_acyclic(G: Hypergraph) -> bool:
    # a forest has |nodes| - |components| edges
    nodes = G.n + G.m
    inc_edges = sum(len(e) for e in G.edges)
    return inc_edges == nodes - len(_components(nodes, incidence_graph(G).edges))


def single_edge(k: int) -> Hypergraph:
    """``B_k``: one edge on ``k`` vertices."""
    if k < 1:
        raise InstanceError("single_edge needs k >= 1")
    return Hypergraph(k, (tuple(range(1, k + 1)),))


def _check_partition(classes: Sequence[Iterable[int]], n: int) -> list[list[int]]:
    blocks = [sorted(set(c)) for c in classes]
    seen = [v for b in blocks for v in b]
    if any(not b for b in blocks):
        raise InstanceError("partition has an empty class")
    if sorted(seen) != list(range(1, n + 1)):
        raise InstanceError(f"classes do not partition 1..{n}")
    return blocks


def quotient(G: Hypergraph, classes: Sequence[Iterable[int]]) -> Hypergraph:
    """Quotient hypergraph: one vertex per class, classes numbered by their
    smallest member, edge ``j`` maps to the set of classes it meets."""
    blocks = sorted(_check_partition(classes, G.n), key=lambda b: b[0])
    cls = {}
    for i, b in enumerate(blocks, 1):
        for v in b:
            cls[v] = i
    return Hypergraph(len(blocks), tuple(tuple(sorted({cls[v] for v in e})) for e in G.edges))


def merge_relation(F: Hypergraph, G: Hypergraph | None, hv: Sequence[int]) -> list[list[int]]:
    """Classes of the relation "joined by a walk whose consecutive vertices share
    an edge and have the same image under ``hv``".

    ``hv[v-1]`` is the image of ``v``.  ``G`` is accepted for symmetry with the
    mathematical definition but only ``hv`` matters.
    """
    if len(hv) != F.n:
        raise InstanceError("hv must be total on V(F)")
    links = []
    for e in F.edges:
        by_image: dict[int, int] = {}
        for v in e:
            first = by_image.setdefault(hv[v - 1], v)
            if first != v:
                links.append((first, v))
    return sorted(_components(F.n, links))


def fill_edges(F: Hypergraph, targets: Sequence[int]) -> Hypergraph:
    """Enlarge edge ``j`` by ``targets[j]`` fresh leaves (appended after ``n``)."""
    if len(targets) != F.m:
        raise InstanceError("need one leaf count per edge")
    nxt = F.n
    edges = []
    for e, t in zip(F.edges, targets):
        if t < 0:
            raise InstanceError("leaf counts must be non-negative")
        edges.append(e + tuple(range(nxt + 1, nxt + t + 1)))
        nxt += t
    return Hypergraph(nxt, tuple(edges))


def merge_parallel_edges(G: Hypergraph) -> Hypergraph:
    return Hypergraph(G.n, tuple(dict.fromkeys(G.edges)))


def collapse_loops(B: Hypergraph, u: int) -> Hypergraph:
    """Replace all loops ``{u}`` of ``B`` by a single loop (kept last)."""
    rest = tuple(e for e in B.edges if e != (u,))
    if len(rest) == B.m:
        raise InstanceError(f"vertex {u} has no loop")
    return Hypergraph(B.n, rest + ((u,),))


def degree_sequence(G: Hypergraph, v: int) -> DegreeSequence:
    """Entry ``i-1`` counts edges of size ``i`` containing ``v`` (length ``n``)."""
    if not 1 <= v <= G.n:
        raise InstanceError(f"vertex {v} outside 1..{G.n}")
    seq = [0] * G.n
    for e in G.edges:
        if v in e:
            seq[len(e) - 1] += 1
    return tuple(seq)


def build_B_rs(Bp: Hypergraph, u: int, r: int, s: int) -> Hypergraph:
    """Add ``r`` edges, each ``{u}`` plus ``s`` private fresh vertices."""
    if s < 1:
        raise InstanceError("s must be positive")
    if r < 0:
        raise InstanceError("r must be non-negative")
    if not 1 <= u <= Bp.n:
        raise InstanceError(f"vertex {u} outside 1..{Bp.n}")
    edges = list(Bp.edges)
    nxt = Bp.n
    for _ in range(r):
        edges.append((u,) + tuple(range(nxt + 1, nxt + s + 1)))
        nxt += s
    return Hypergraph(nxt, tuple(edges))


def disjoint_union(G: Hypergraph, H: Hypergraph) -> Hypergraph:
    shifted = tuple(tuple(v + G.n for v in e) for e in H.edges)
    return Hypergraph(G.n + H.n, G.edges + shifted)


# -- JSON instance format ---------------------------------------------------

def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InstanceError(f"{what} must be an integer, got {x!r}")
    return x


def from_json(obj: dict) -> Hypergraph | ColoredGraph | Digraph:
    if not isinstance(obj, dict):
        raise InstanceError("instance must be a JSON object")
    kind = obj.get("type")
    n = _int(obj.get("n"), "n")
    if n < 0:
        raise InstanceError("n must be non-negative")
    if kind == "hypergraph":
        edges = []
        for e in obj.get("edges", []):
            if not isinstance(e, list):
                raise InstanceError("hyperedges must be lists")
            edges.append(tuple(sorted(_int(v, "vertex id") for v in e)))
        return Hypergraph(n, tuple(edges))
    if kind == "cgraph":
        colors = tuple(_int(c, "color") for c in obj.get("colors", []))
        pairs = []
        for e in obj.get("edges", []):
            if not isinstance(e, list) or len(e) != 2:
                raise InstanceError("cgraph edges must be pairs")
            pairs.append((_int(e[0], "vertex id"), _int(e[1], "vertex id")))
        return ColoredGraph(n, colors, frozenset(pairs))
    if kind == "digraph":
        arcs = []
        for a in obj.get("arcs", []):
            if not isinstance(a, list) or len(a) != 2:
                raise InstanceError("arcs must be pairs")
            arcs.append((_int(a[0], "vertex id"), _int(a[1], "vertex id")))
        if len(set(arcs)) != len(arcs):
            raise InstanceError("duplicate arc")
        return Digraph(n, frozenset(arcs))
    raise InstanceError(f"unknown instance type {kind!r}")


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"malformed JSON: {exc}") from exc
    return from_json(obj)


def dumps(x: Hypergraph | ColoredGraph | Digraph) -> str:
    return json.dumps(x.to_json(), separators=(",", ":"))
