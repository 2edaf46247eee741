from itertools import combinations

import networkx as nx
from hypothesis import given, settings, strategies as st

from hypercr.canon import canonical, encoding
from hypercr.enumeration import (enum_ba, enum_ba_m_n, enum_cgraphs, enum_colored_trees, enum_connected,
                                 enum_dags_A3, enum_digraphs, enum_hypergraphs, family_key, is_ba_family)
from hypercr.homcount import is_isomorphic
from hypercr.hypercore import ColoredGraph, Digraph, Hypergraph, incidence_graph, is_berge_acyclic, is_connected, single_edge

from test_hypercore import hypergraphs

K1 = Hypergraph(1, ())


def _nx(T: ColoredGraph):
    g = nx.Graph()
    g.add_nodes_from((v, {"c": T.colors[v - 1]}) for v in T.vertices())
    g.add_edges_from(T.edges)
    return g


def _nx_iso(G: Hypergraph, H: Hypergraph) -> bool:
    return nx.is_isomorphic(_nx(incidence_graph(G)), _nx(incidence_graph(H)), node_match=lambda a, b: a == b)


def test_enum_ba_examples():
    assert enum_ba(1) == (K1,)
    assert set(enum_ba(2)) == {K1, single_edge(1)}
    assert set(enum_ba(3)) == {K1, single_edge(1), single_edge(2), Hypergraph(1, ((1,), (1,)))}
    assert is_ba_family(enum_ba(7))


def test_enum_ba_equals_filter():
    fam = enum_hypergraphs(4, 3, 4)
    expected = {G for G in fam if is_connected(G) and is_berge_acyclic(G) and G.weight <= 6 and G.n <= 4}
    got = {G for G in enum_ba(6) if G.n <= 4 and G.m <= 3}
    assert got == expected


def test_enum_ba_incidence_graphs_are_trees():
    for B in enum_ba(7):
        T = incidence_graph(B)
        assert T.is_tree()


def test_enum_ba_m_n():
    assert set(enum_ba_m_n(1, 3)) == {single_edge(1), single_edge(2), single_edge(3)}
    assert enum_ba_m_n(0, 2) == (K1,)
    for B in enum_ba_m_n(2, 3):
        assert B.m == 2 and max(len(e) for e in B.edges) <= 3


def test_enum_ba_m_n_matches_hypergraph_filter():
    expected = {G for G in enum_hypergraphs(5, 2, 3) if G.m == 2 and is_connected(G) and is_berge_acyclic(G)}
    assert set(enum_ba_m_n(2, 3)) == expected


def test_enum_hypergraphs_examples():
    assert set(enum_hypergraphs(1, 1, 1, simple_only=True)) == {K1, single_edge(1)}
    assert set(enum_hypergraphs(2, 0, 2)) == {K1, Hypergraph(2, ())}
    # by hand: K1, B1, B2 and {1},{1,2}
    assert len(enum_hypergraphs(2, 2, 2, simple_only=True, connected_only=True)) == 4


def test_enum_hypergraphs_counts_against_networkx():
    # classes of hypergraphs are classes of colored incidence graphs
    fam = enum_hypergraphs(3, 2, 3)
    raw = []
    from itertools import combinations_with_replacement
    for n in range(1, 4):
        subsets = [c for k in range(1, n + 1) for c in combinations(range(1, n + 1), k)]
        for m in range(3):
            raw.extend(Hypergraph(n, es) for es in combinations_with_replacement(subsets, m))
    reps = []
    for G in raw:
        if not any(_nx_iso(G, R) for R in reps):
            reps.append(G)
    assert len(reps) == len(fam)


def test_families_isomorph_free():
    for fam in (enum_ba(6), enum_hypergraphs(3, 2, 3)):
        for G, H in combinations(fam, 2):
            assert not _nx_iso(G, H)


def test_family_order():
    fam = enum_hypergraphs(3, 3, 3)
    assert list(fam) == sorted(fam, key=family_key)


def test_enum_connected_matches_filter():
    fam = enum_hypergraphs(4, 3, 4, connected_only=True)
    for m in range(4):
        for size in range(1, 5):
            for max_v in range(1, 5):
                expected = {G for G in fam if G.m == m and G.n <= max_v and all(len(e) <= size for e in G.edges)}
                assert set(enum_connected(m, size, max_v)) == expected, (m, size, max_v)


@settings(max_examples=60)
@given(hypergraphs(max_v=5, max_e=4), st.permutations(range(1, 6)))
def test_canonical_is_permutation_invariant(G, perm):
    p = [x for x in perm if x <= G.n]
    assert encoding(G) == encoding(G.relabel(p))
    assert canonical(canonical(G)) == canonical(G)


@settings(max_examples=60)
@given(hypergraphs(max_v=4, max_e=3), hypergraphs(max_v=4, max_e=3))
def test_canonical_agrees_with_networkx(G, H):
    assert (encoding(G) == encoding(H)) == _nx_iso(G, H)
    assert is_isomorphic(G, H) == _nx_iso(G, H)


def test_digraph_families():
    assert set(enum_digraphs(1)) == {Digraph(1, frozenset()), Digraph(1, frozenset({(1, 1)}))}
    # unlabeled digraphs with loops on 1, 2, 3 vertices: 2, 10, 104
    assert len(enum_digraphs(3)) == 2 + 10 + 104
    dags = enum_dags_A3(3)
    T3 = Digraph(3, frozenset({(1, 2), (1, 3), (2, 3)}))
    C3 = Digraph(3, frozenset({(1, 2), (2, 3), (3, 1)}))
    assert canonical(T3) in dags and canonical(C3) not in dags
    assert canonical(Digraph(2, frozenset({(1, 2)}))) in dags


def test_cgraph_families():
    # graphs on at most 4 vertices: 1 + 2 + 4 + 11
    assert len(enum_cgraphs(4, 1)) == 18
    # free trees on 1..6 nodes: 1, 1, 1, 2, 3, 6
    assert len(enum_colored_trees(6, 1)) == 14
    for T in enum_colored_trees(6, 2):
        assert T.is_tree()
