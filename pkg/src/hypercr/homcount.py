"""Exact counts of hypergraph mapping pairs ``(hv, he)``.

:func:`count` is one backtracking enumerator over vertex maps ``hv``; the
selected :class:`CountKind` decides which per-edge and global predicates a
pair must satisfy.  For every admissible ``hv`` the edge maps are counted
directly: a product of per-edge choices, or the number of perfect matchings
when ``he`` has to be a bijection.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence

from .hypercore import ColoredGraph, Hypergraph, InstanceError, incidence_graph, is_berge_acyclic, is_connected

BASES = ("hom", "inhom")
LOCALITIES = ("none", "loc_injective", "loc_bijective")
HV_MODES = ("any", "injective", "surjective", "bijective")
HE_MODES = ("any", "bijective")


class ConnectivityError(InstanceError):
    """A species that is only defined for connected sources got a disconnected one."""


@dataclass(frozen=True)
class CountKind:
    base: str = "hom"
    locality: str = "none"
    strong: bool = False
    hv_mode: str = "any"
    he_mode: str = "any"
    merge_exact: bool = False
    leaves_only_missed: bool = False
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.base not in BASES or self.locality not in LOCALITIES:
            raise ValueError(f"bad base/locality: {self.base}/{self.locality}")
        if self.hv_mode not in HV_MODES or self.he_mode not in HE_MODES:
            raise ValueError(f"bad hv/he mode: {self.hv_mode}/{self.he_mode}")

    @property
    def needs_connected(self) -> bool:
        return self.locality != "none" or self.merge_exact or self.leaves_only_missed

    def __str__(self):
        return self.name or repr(self)


HOM = CountKind("hom", name="Hom")
INHOM = CountKind("inhom", name="InHom")
LOINJINHOM = CountKind("inhom", "loc_injective", name="LoInjInHom")
# locally injective homomorphisms
LOINJHOM = CountKind("hom", "loc_injective", name="LoInjHom")
# same species, phrased as locally bijective incidence homomorphisms
LOBIJINHOM = CountKind("inhom", "loc_bijective", name="LoBijInHom")
LOMEHOM = CountKind("hom", hv_mode="surjective", he_mode="bijective", merge_exact=True, name="LoMeHom")
LEAFADDINHOM = CountKind("inhom", strong=True, hv_mode="injective", he_mode="bijective",
                         leaves_only_missed=True, name="LeafAddInHom")
AUT = CountKind("hom", hv_mode="bijective", he_mode="bijective", name="Aut")

KINDS = {
    "hom": HOM,
    "inhom": INHOM,
    "loinjinhom": LOINJINHOM,
    "loinjhom": LOINJHOM,
    "lobijinhom": LOBIJINHOM,
    "lomehom": LOMEHOM,
    "leafaddinhom": LEAFADDINHOM,
    "aut": AUT,
}


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _vertex_order(F: Hypergraph) -> tuple[list[int], list[int]]:
    """BFS order over shared edges, plus each vertex's already-placed anchor (0 if
    it starts a new component)."""
    incident = [[] for _ in range(F.n + 1)]
    for e in F.edges:
        for v in e:
            incident[v].append(e)
    seen = [False] * (F.n + 1)
    order, anchor = [], []
    for s in F.vertices():
        if seen[s]:
            continue
        seen[s] = True
        order.append(s)
        anchor.append(0)
        q = deque([s])
        while q:
            u = q.popleft()
            for e in incident[u]:
                for w in e:
                    if not seen[w]:
                        seen[w] = True
                        order.append(w)
                        anchor.append(u)
                        q.append(w)
    return order, anchor


def _count_matchings(compat: Sequence[Sequence[int]]) -> int:
    """Number of bijections picking a distinct allowed target for every row."""
    memo: dict[tuple[int, int], int] = {}

    def go(i, used):
        if i == len(compat):
            return 1
        key = (i, used)
        if key in memo:
            return memo[key]
        total = 0
        for g in compat[i]:
            if not used >> g & 1:
                total += go(i + 1, used | 1 << g)
        memo[key] = total
        return total

    return go(0, 0)


def _merge_class_count(F: Hypergraph, hv: Sequence[int]) -> int:
    parent = list(range(F.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    classes = F.n
    for e in F.edges:
        first: dict[int, int] = {}
        for v in e:
            u = first.setdefault(hv[v], v)
            if u != v:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    classes -= 1
    return classes


@lru_cache(maxsize=None)
def count(kind: CountKind, F: Hypergraph, G: Hypergraph, pin: tuple[int, int] | None = None) -> int:
    """Number of pairs ``(hv, he)`` from ``F`` to ``G`` of the given kind.

    ``pin=(u, x)`` restricts the count to pairs with ``hv(u) = x``.
    """
    if kind.needs_connected and not is_connected(F):
        raise ConnectivityError(f"{kind} is only defined for connected sources")
    injective = kind.hv_mode in ("injective", "bijective")
    surjective = kind.hv_mode in ("surjective", "bijective")
    bijective_e = kind.he_mode == "bijective"
    if injective and F.n > G.n or surjective and F.n < G.n:
        return 0
    if bijective_e and F.m != G.m:
        return 0
    if F.m and not G.m:
        return 0

    exact = kind.base == "hom" or kind.locality == "loc_bijective"
    loc_inj = kind.locality != "none"
    gmask = [_mask(g) for g in G.edges]
    fsize = [len(e) for e in F.edges]
    full = _mask(G.vertices())
    leaves = _mask(G.leaves())
    # closed co-edge neighbourhoods in G
    reach = [0] * (G.n + 1)
    for gm in gmask:
        for x in G.vertices():
            if gm >> x & 1:
                reach[x] |= gm

    order, anchor = _vertex_order(F)
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list[int]] = [[] for _ in order]
    for j, e in enumerate(F.edges):
        closing[max(pos[v] for v in e)].append(j)

    hv = [0] * (F.n + 1)
    compat: list[list[int]] = [[] for _ in F.edges]
    everything = list(G.vertices())

    def edge_compat(j: int) -> list[int]:
        img = 0
        for v in F.edges[j]:
            img |= 1 << hv[v]
        if loc_inj and img.bit_count() != fsize[j]:
            return []
        if exact:
            return [g for g, gm in enumerate(gmask) if gm == img]
        return [g for g, gm in enumerate(gmask) if img & ~gm == 0]

    def finish(used: int) -> int:
        if surjective and used != full:
            return 0
        if kind.leaves_only_missed and (full & ~used) & ~leaves:
            return 0
        if kind.merge_exact and _merge_class_count(F, hv) != used.bit_count():
            return 0
        rows = compat
        if kind.strong:
            rows = []
            for j, e in enumerate(F.edges):
                emask = _mask(e)
                keep = []
                for g in compat[j]:
                    pre = 0
                    for w in F.vertices():
                        if gmask[g] >> hv[w] & 1:
                            pre |= 1 << w
                    if pre & ~emask == 0:
                        keep.append(g)
                if not keep:
                    return 0
                rows.append(keep)
        if bijective_e:
            return _count_matchings(rows)
        total = 1
        for r in rows:
            total *= len(r)
        return total

    def rec(k: int, used: int) -> int:
        if k == len(order):
            return finish(used)
        v = order[k]
        a = anchor[k]
        if pin is not None and v == pin[0]:
            cands = [pin[1]] if a == 0 or reach[hv[a]] >> pin[1] & 1 else []
        else:
            cands = everything if a == 0 else [x for x in everything if reach[hv[a]] >> x & 1]
        total = 0
        for x in cands:
            bit = 1 << x
            if injective and used & bit:
                continue
            hv[v] = x
            for j in closing[k]:
                c = edge_compat(j)
                if not c:
                    break
                compat[j] = c
            else:
                total += rec(k + 1, used | bit)
        return total

    return rec(0, 0)


def count_aut(G: Hypergraph) -> int:
    return count(AUT, G, G)


def is_isomorphic(G: Hypergraph, H: Hypergraph) -> bool:
    from .canon import canonical_hypergraph
    return canonical_hypergraph(G) == canonical_hypergraph(H)


# -- colored graphs ---------------------------------------------------------

def count_hom_cgraph_brute(T: ColoredGraph, G: ColoredGraph) -> int:
    """Color- and adjacency-preserving maps by pruned backtracking."""
    adjT = T.adjacency()
    eG = G.edges
    order = list(T.vertices())
    h = [0] * (T.n + 1)

    def rec(k):
        if k == len(order):
            return 1
        t = order[k]
        total = 0
        for x in G.vertices():
            if G.colors[x - 1] != T.colors[t - 1]:
                continue
            if all(u >= t or (min(x, h[u]), max(x, h[u])) in eG for u in adjT[t]):
                h[t] = x
                total += rec(k + 1)
        return total

    return rec(0)


def count_hom_cgraph(T: ColoredGraph, G: ColoredGraph) -> int:
    """Homomorphisms between vertex-colored graphs; tree DP when ``T`` is a tree."""
    if not T.is_connected():
        raise ConnectivityError("count_hom_cgraph needs a connected pattern")
    if not T.is_tree():
        return count_hom_cgraph_brute(T, G)
    adjT = T.adjacency()
    adjG = G.adjacency()
    parent = [0] * (T.n + 1)
    order = [1]
    parent[1] = -1
    for t in order:
        for c in adjT[t]:
            if c != parent[t]:
                parent[c] = t
                order.append(c)
    dp: list[list[int]] = [[]] * (T.n + 1)
    for t in reversed(order):
        row = [0] * (G.n + 1)
        kids = [c for c in adjT[t] if c != parent[t]]
        for x in G.vertices():
            if G.colors[x - 1] != T.colors[t - 1]:
                continue
            val = 1
            for c in kids:
                dc = dp[c]
                val *= sum(dc[y] for y in adjG[x])
                if not val:
                    break
            row[x] = val
        dp[t] = row
    return sum(dp[1])


# -- fast path for Berge-acyclic sources -----------------------------------

def count_ba(kind: CountKind, B: Hypergraph, G: Hypergraph) -> int:
    """Hom or InHom from a connected Berge-acyclic ``B`` by dynamic programming.

    InHom goes through the colored incidence graphs.  Hom roots the incidence
    tree at vertex 1; an edge node needs the image of its parent vertex and
    children to fill a target edge exactly, which is counted by inclusion and
    exclusion over the subsets of that target edge.
    """
    if not (is_connected(B) and is_berge_acyclic(B)):
        raise InstanceError("count_ba needs a connected Berge-acyclic source")
    if kind == INHOM:
        return count_hom_cgraph(incidence_graph(B), incidence_graph(G))
    if kind != HOM:
        raise ValueError("count_ba handles Hom and InHom only")
    incident = [[] for _ in range(B.n + 1)]
    for j, e in enumerate(B.edges):
        for v in e:
            incident[v].append(j)
    gsets = [tuple(g) for g in G.edges]
    # subsets S of each target edge, with sign (-1)^{|g \ S|}
    subsets = []
    for g in gsets:
        subs = []
        for bits in product((0, 1), repeat=len(g)):
            S = tuple(x for x, b in zip(g, bits) if b)
            subs.append((S, -1 if (len(g) - len(S)) % 2 else 1))
        subsets.append(subs)

    def vertex_table(t: int, via_edge: int) -> list[int]:
        row = [1] * (G.n + 1)
        for j in incident[t]:
            if j == via_edge:
                continue
            kids = [vertex_table(c, j) for c in B.edges[j] if c != t]
            for x in G.vertices():
                if not row[x]:
                    continue
                acc = 0
                for gi, g in enumerate(gsets):
                    if x not in g:
                        continue
                    for S, sign in subsets[gi]:
                        if x not in S:
                            continue
                        term = sign
                        for dc in kids:
                            term *= sum(dc[y] for y in S)
                            if not term:
                                break
                        acc += term
                row[x] *= acc
        return row

    root = vertex_table(1, -1)
    return sum(root[1:])
