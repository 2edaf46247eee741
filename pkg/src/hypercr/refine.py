"""Color refinement on vertex-colored graphs and on hypergraphs.

Colors are nested multisets.  Rather than carrying the (exponentially
growing) nested structures around, every color is interned in a
:class:`ColorTable`: the key of a round-``i+1`` color is the sorted tuple of
the ids of its round-``i`` constituents, so two vertices, possibly from
different structures, get the same id iff their nested multisets are equal.
This is exact; nothing is hashed down to a fixed width.  Structures are only
comparable when refined against the same table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .hypercore import ColoredGraph, Hypergraph


class ColorTable:
    """Injective map from (round, nested signature) to small integer ids."""

    def __init__(self):
        self._ids: dict[tuple, int] = {}
        self._keys: list[tuple] = []
        self._strings: dict[int, str] = {}

    def __len__(self):
        return len(self._keys)

    def intern(self, key: tuple) -> int:
        cid = self._ids.get(key)
        if cid is None:
            cid = self._ids[key] = len(self._keys)
            self._keys.append(key)
        return cid

    def string(self, cid: int) -> str:
        """Canonical serialization of the nested multiset behind ``cid``.

        Initial colors print as themselves; a multiset prints as its sorted
        member strings in braces.  An own-color prefix prints as
        ``own|{...}``.
        """
        s = self._strings.get(cid)
        if s is not None:
            return s
        key = self._keys[cid]
        tag = key[1]
        if tag == "init":
            s = str(key[2])
        elif tag == "nbr":
            s = _braces(self.string(c) for c in key[2])
        elif tag == "own":
            s = self.string(key[2]) + "|" + _braces(self.string(c) for c in key[3])
        else:  # "hyp": multiset of edge multisets
            s = _braces(_braces(self.string(c) for c in inner) for inner in key[2])
        self._strings[cid] = s
        return s


def _braces(parts) -> str:
    return "{" + ",".join(sorted(parts)) + "}"


def _canonical_partition(colors: Sequence[int]) -> tuple[int, ...]:
    # relabel by first occurrence so equal partitions compare equal
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(c, len(seen)) for c in colors)


@dataclass
class ColorHistory:
    rounds: list[tuple[int, ...]]
    table: ColorTable

    @property
    def histograms(self) -> list[tuple[tuple[int, int], ...]]:
        return [histogram(r) for r in self.rounds]

    def partition(self, i: int) -> tuple[int, ...]:
        return _canonical_partition(self.rounds[i])

    @property
    def stable_round(self) -> int | None:
        """First ``i`` whose partition equals that of round ``i+1`` (``None`` if
        not reached within the computed rounds)."""
        parts = [self.partition(i) for i in range(len(self.rounds))]
        for i in range(len(parts) - 1):
            if parts[i] == parts[i + 1]:
                return i
        return None

    def class_count(self, i: int) -> int:
        return len(set(self.rounds[i]))

    def color_string(self, i: int, v: int) -> str:
        """Nested-multiset color of vertex ``v`` (1-based) at round ``i``."""
        return self.table.string(self.rounds[i][v - 1])


def histogram(colors: Sequence[int]) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    return tuple(sorted(counts.items()))


def cr_graph(G: ColoredGraph, max_rounds: int, include_own_color: bool = True,
             table: ColorTable | None = None) -> ColorHistory:
    """Refine ``G`` for ``max_rounds`` rounds (``max_rounds + 1`` colorings)."""
    table = table if table is not None else ColorTable()
    adj = G.adjacency()
    cur = tuple(table.intern((0, "init", c)) for c in G.colors)
    rounds = [cur]
    for i in range(1, max_rounds + 1):
        nxt = []
        for v in G.vertices():
            nbrs = tuple(sorted(cur[u - 1] for u in adj[v]))
            key = (i, "own", cur[v - 1], nbrs) if include_own_color else (i, "nbr", nbrs)
            nxt.append(table.intern(key))
        cur = tuple(nxt)
        rounds.append(cur)
    return ColorHistory(rounds, table)


def cr_hypergraph(G: Hypergraph, max_rounds: int, table: ColorTable | None = None) -> ColorHistory:
    """Hypergraph refinement: a vertex's next color is the multiset, over its
    incident edges, of the multiset of current colors in that edge."""
    table = table if table is not None else ColorTable()
    incident = [[] for _ in range(G.n + 1)]
    for e in G.edges:
        for v in e:
            incident[v].append(e)
    cur = (table.intern((0, "init", 1)),) * G.n
    rounds = [cur]
    for i in range(1, max_rounds + 1):
        edge_color = {}
        nxt = []
        for v in G.vertices():
            inner = []
            for e in incident[v]:
                ec = edge_color.get(e)
                if ec is None:
                    ec = edge_color[e] = tuple(sorted(cur[u - 1] for u in e))
                inner.append(ec)
            nxt.append(table.intern((i, "hyp", tuple(sorted(inner)))))
        cur = tuple(nxt)
        rounds.append(cur)
    return ColorHistory(rounds, table)


class Verdict(NamedTuple):
    distinguished: bool
    round: int | None


def compare_histories(hg: ColorHistory, hh: ColorHistory, max_rounds: int) -> Verdict:
    """First round (``<= max_rounds``) whose histograms differ."""
    if hg.table is not hh.table:
        raise ValueError("histories must share a ColorTable to be comparable")
    for i in range(max_rounds + 1):
        if histogram(hg.rounds[i]) != histogram(hh.rounds[i]):
            return Verdict(True, i)
    return Verdict(False, None)


def distinguishes_hypergraphs(G: Hypergraph, H: Hypergraph, max_rounds: int | None = None) -> Verdict:
    """Whether hypergraph refinement tells ``G`` and ``H`` apart.

    The default budget ``max(n_G, n_H) + 1`` covers both stabilization points:
    once both colorings are stable and balanced they stay balanced.
    """
    if max_rounds is None:
        max_rounds = max(G.n, H.n) + 1
    table = ColorTable()
    return compare_histories(cr_hypergraph(G, max_rounds, table), cr_hypergraph(H, max_rounds, table), max_rounds)


def distinguishes_cgraphs(G: ColoredGraph, H: ColoredGraph, include_own_color: bool = True,
                          max_rounds: int | None = None) -> Verdict:
    if max_rounds is None:
        max_rounds = max(G.n, H.n) + 1
    table = ColorTable()
    return compare_histories(cr_graph(G, max_rounds, include_own_color, table),
                             cr_graph(H, max_rounds, include_own_color, table), max_rounds)
