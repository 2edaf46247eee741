from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hypercr.enumeration import enum_ba, enum_hypergraphs
from hypercr.homcount import INHOM, LEAFADDINHOM, LOMEHOM, ConnectivityError, count
from hypercr.hypercore import Hypergraph, InstanceError, single_edge
from hypercr.verify import (CountMatrixSlice, InconsistentInput, check_b_rs_formula, check_corollary_sba,
                            check_decomposition_hom, check_decomposition_inhom, check_decomposition_loinj,
                            check_degree_interpolation, check_lemma2, check_lemma6_restriction, check_nodes_distinct,
                            check_theorem1, check_triangularity, choose_s, default_budget, degree_node,
                            degree_seq_domain, edge_size_histogram, inhom_by_degree_sequence, inhom_single_edges,
                            recover_edge_size_counts, solve_exact)

K1 = Hypergraph(1, ())
B1, B2, B3 = single_edge(1), single_edge(2), single_edge(3)


def _terms(report):
    return {(tuple(map(tuple, t[0]["edges"])), t[1], t[2], t[3]) for t in report.detail["terms"]}


def test_decomposition_inhom_example(nested):
    r = check_decomposition_inhom(B2, nested)
    assert r and r.detail["direct"] == 13
    # 2 * (1/2) * 8 + 1 * (1/1) * 5
    assert _terms(r) == {(((1, 2),), 2, 2, 8), (((1,),), 1, 1, 5)}


def test_decomposition_hom_example(nested):
    r = check_decomposition_hom(B2, nested)
    assert r and r.detail["direct"] == 2
    assert _terms(r) == {(((1, 2),), 2, 2, 2)}


def test_decomposition_loinj_example(nested):
    r = check_decomposition_loinj(B2, nested)
    assert r and r.detail["direct"] == 8
    assert _terms(r) == {(((1, 2),), 2, 2, 2), (((1, 2, 3),), 6, 6, 6)}


def test_decomposition_trivial_cases(nested):
    for H in (nested, Hypergraph(2, ())):
        assert check_decomposition_inhom(K1, H).detail["direct"] == H.n
        assert check_decomposition_hom(K1, H)
    edgeless = Hypergraph(3, ())
    r = check_decomposition_loinj(B2, edgeless)
    assert r and r.detail["direct"] == 0 and r.detail["sum"] == "0"


def test_decompositions_reject_disconnected(nested):
    G = Hypergraph(2, ((1,), (2,)))
    for check in (check_decomposition_inhom, check_decomposition_hom, check_decomposition_loinj):
        with pytest.raises(ConnectivityError):
            check(G, nested)


def test_decompositions_on_cyclic_sources():
    G = Hypergraph(3, ((1, 2), (2, 3), (1, 3)))
    for H in enum_hypergraphs(3, 2, 3):
        assert check_decomposition_inhom(G, H)
        assert check_decomposition_hom(G, H)
        assert check_decomposition_loinj(G, H)


def test_triangularity_examples():
    assert count(LOMEHOM, B1, B2) == 0
    assert count(LEAFADDINHOM, B3, B2) == 0
    fam = enum_ba(5)
    assert check_triangularity(fam, LOMEHOM)
    assert check_triangularity(fam, LEAFADDINHOM)
    with pytest.raises(ValueError):
        check_triangularity(fam, INHOM)


def test_slice_entries():
    fam = enum_ba(4)
    s = CountMatrixSlice.build(LEAFADDINHOM, fam)
    for i, F in enumerate(fam):
        for j, G in enumerate(fam):
            assert s.entry(i, j) == count(LEAFADDINHOM, F, G)


def test_solve_exact_against_sympy():
    rng = __import__("random").Random(7)
    for n in range(1, 6):
        A = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        b = [rng.randint(-9, 9) for _ in range(n)]
        M = sympy.Matrix(A)
        if M.det() == 0:
            continue
        expected = M.LUsolve(sympy.Matrix(b))
        got = solve_exact(A, b)
        assert [Fraction(int(x.p), int(x.q)) for x in expected] == got


def test_solve_exact_singular():
    with pytest.raises(ZeroDivisionError):
        solve_exact([[1, 2], [2, 4]], [1, 2])


def test_recover_examples(nested):
    assert recover_edge_size_counts([5, 13, 35], 3) == ([0, 1, 1], 2)
    assert recover_edge_size_counts([0, 0, 0], 3) == ([0, 0, 0], 0)
    assert recover_edge_size_counts([], 0) == ([], 0)
    with pytest.raises(InconsistentInput):
        recover_edge_size_counts([1, 2], 2)
    with pytest.raises(ValueError):
        recover_edge_size_counts([1], 2)


@settings(max_examples=50)
@given(st.integers(1, 6), st.data())
def test_recover_round_trip_from_histograms(n, data):
    hist = data.draw(st.lists(st.integers(0, 4), min_size=n, max_size=n))
    forward = [sum(c * i ** k for i, c in enumerate(hist, 1)) for k in range(1, n + 1)]
    assert recover_edge_size_counts(forward, n) == (hist, sum(hist))


def test_recover_round_trip_on_brute_counts():
    for G in enum_hypergraphs(3, 3, 3):
        counts, m = recover_edge_size_counts(inhom_single_edges(G), G.n)
        assert counts == edge_size_histogram(G) and m == G.m


def test_witness_reports(nested, path3):
    r = check_theorem1(nested, nested)
    assert r.ok and not r.d and r.witness is None and r.status == "isomorphic"
    r = check_theorem1(nested, path3)
    assert r.ok and r.d and r.round == 1 and r.status == "witness"
    assert r.witness == B2 and r.counts == (2, 4)
    r = check_lemma2(nested, path3)
    assert r.ok and r.witness is not None
    assert count(INHOM, r.witness, nested) != count(INHOM, r.witness, path3)


def test_witness_budget_exhaustion_is_reported(nested, path3):
    r = check_theorem1(nested, path3, ba_weight_budget=1)
    assert not r.ok and r.status == "budget_exhausted"


def test_refinement_blind_pair_has_no_witness():
    two = Hypergraph(6, ((1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)))
    six = Hypergraph(6, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)))
    r = check_theorem1(two, six, ba_weight_budget=9)
    assert r.ok and not r.d and r.status == "no_witness"
    r = check_corollary_sba(two, six, ba_weight_budget=9)
    assert r.ok and r.status == "no_witness"


def test_simple_witness_requires_simple(nested):
    with pytest.raises(InstanceError):
        check_corollary_sba(Hypergraph(1, ((1,), (1,))), nested)


def test_default_budget(nested, path3):
    assert default_budget(nested, path3) == 20


def test_choose_s():
    assert choose_s(1) == 1
    assert choose_s(2) == 2
    for n in range(1, 7):
        s = choose_s(n)

        def holds(t):
            return all(sum(2 ** (n - 1) * i ** t for i in range(1, j)) < j ** t for j in range(1, n + 1))

        assert holds(s) and (s == 1 or not holds(s - 1))


def test_degree_domain():
    assert degree_seq_domain(2) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert sorted(degree_node(d, 2) for d in degree_seq_domain(2)) == [0, 1, 4, 5]
    assert len(degree_seq_domain(3)) == 2 * 3 * 2
    assert all(check_nodes_distinct(n) for n in range(1, 5))


def test_b_rs_formula_examples(nested):
    assert check_b_rs_formula(B1, 1, nested, 0, 1).detail["lhs"] == count(INHOM, B1, nested)
    r = check_b_rs_formula(B1, 1, nested, 1, 1)
    assert r and r.detail["lhs"] == r.detail["rhs"]


def test_partition_by_degree_sequence(nested):
    parts = inhom_by_degree_sequence(B1, 1, nested)
    assert parts == {(0, 1, 1): 4, (0, 0, 1): 1}


def test_degree_interpolation():
    assert check_degree_interpolation(B1, 1, Hypergraph(2, ()))
    assert check_degree_interpolation(B1, 1, Hypergraph(2, ((1, 2), (1,))))
    reduced = Hypergraph(2, ((1, 2), (1,)))  # a loop at 1 next to an edge
    assert check_degree_interpolation(reduced, 1, Hypergraph(2, ((1, 2),)))
    with pytest.raises(InstanceError):
        check_degree_interpolation(B2, 1, Hypergraph(2, ()))
    with pytest.raises(InstanceError):
        check_degree_interpolation(B1, 1, Hypergraph(2, ((1,), (1,))))


def test_leaf_adding_slice(nested):
    r = check_lemma6_restriction(1, 3, nested)
    assert r and r.detail["lhs"] == [5, 8, 6]
    assert check_lemma6_restriction(0, 3, nested).detail["lhs"] == [3]
    with pytest.raises(ValueError):
        check_lemma6_restriction(1, 2, nested)


def test_report_json_shape(nested, path3):
    out = check_theorem1(nested, path3).to_json()
    assert out["check"] == "hom_witness" and out["ok"] is True
    assert out["detail"]["status"] == "witness" and out["witness"]["edges"] == [[1, 2]]
