import random

import numpy as np
import pytest
from hypothesis import given, settings

import biphole._kernels as K
from biphole import holes
from biphole.families import complete, complete_bipartite, cycle, edgeless, gen_circulant_qk, gen_ex51, star, union
from biphole.graph import (
    INFINITY,
    Graph,
    GraphFormatError,
    bondy_chvatal_closure,
    build_graph,
    component_masks,
    components,
    degree_sequence,
    delta,
    has_triangle,
    is_balanced_complete_bipartite,
    is_bipartite,
    neighborhood_of_set,
    parse_edge_list,
    parse_graph6,
    read_graph6_lines,
    sigma2,
    write_edge_list,
    write_graph6,
)

from conftest import all_labeled, graph_with_non_edge, graphs


class TestBuild:
    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g.m == 3 and g.is_complete()

    def test_single_vertex(self):
        g = build_graph(1, [])
        assert g.n == 1 and g.m == 0

    def test_duplicates_collapse(self):
        assert build_graph(4, [(0, 1), (0, 1), (1, 0)]).m == 1

    @pytest.mark.parametrize("n, edges", [(0, []), (3, [(0, 3)]), (3, [(1, 1)]), (3, [(-1, 2)])])
    def test_rejects(self, n, edges):
        with pytest.raises(ValueError):
            build_graph(n, edges)

    def test_asymmetric_masks_rejected(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0))

    def test_immutable(self):
        g = cycle(4)
        h = g.with_edge(0, 2)
        assert g.m == 4 and h.m == 5
        with pytest.raises(AttributeError):
            g.n = 5


def test_degrees():
    assert degree_sequence(complete(4)) == [3, 3, 3, 3] and delta(complete(4)) == 3
    assert sorted(degree_sequence(complete_bipartite(3, 4))) == [3] * 4 + [4] * 3
    assert delta(complete_bipartite(3, 4)) == 3
    assert delta(star(5)) == 1


def test_sigma2_values():
    assert sigma2(cycle(5)) == 4
    assert sigma2(complete(5)) == INFINITY
    assert sigma2(complete(1)) == INFINITY
    assert sigma2(gen_ex51(12, 5)) == 12


def test_neighborhood_of_set():
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert neighborhood_of_set(p3, {0, 2}) == {1}
    assert neighborhood_of_set(complete(4), {0}) == {1, 2, 3}
    two_triangles = union(complete(3), complete(3))
    assert neighborhood_of_set(two_triangles, {0, 1, 2}) == set()
    with pytest.raises(ValueError):
        neighborhood_of_set(p3, [])


def test_components():
    assert [len(c) for c in components(union(complete(3), complete(2)))] == [2, 3]
    assert [len(c) for c in components(cycle(6))] == [6]
    assert components(edgeless(4)) == [frozenset({v}) for v in range(4)]


def test_components_order_ties_by_least_vertex():
    g = union(union(complete(2), edgeless(1)), complete(2))
    assert components(g) == [frozenset({2}), frozenset({0, 1}), frozenset({3, 4})]


def test_triangle():
    assert not has_triangle(complete_bipartite(3, 3))[0]
    g = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    found, witness = has_triangle(g)
    assert found
    a, b, c = witness
    assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    assert has_triangle(cycle(5)) == (False, None)


def test_balanced_complete_bipartite():
    assert is_balanced_complete_bipartite(complete_bipartite(3, 3))
    assert not is_balanced_complete_bipartite(complete_bipartite(2, 3))
    assert is_balanced_complete_bipartite(cycle(4))
    assert not is_balanced_complete_bipartite(edgeless(2))
    assert not is_balanced_complete_bipartite(union(cycle(4), cycle(4)))
    assert is_bipartite(cycle(6)) and not is_bipartite(cycle(5))


class TestClosure:
    def test_c4_closes_to_k4(self):
        assert bondy_chvatal_closure(cycle(4)) == complete(4)

    def test_circulant_is_closed(self):
        g = gen_circulant_qk(1, 2)
        assert bondy_chvatal_closure(g) == g

    def test_complete_unchanged(self):
        assert bondy_chvatal_closure(complete(3)) == complete(3)

    def test_input_unchanged(self):
        g = cycle(4)
        bondy_chvatal_closure(g)
        assert g.m == 4

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=8))
    def test_idempotent_and_superset(self, g):
        cl = bondy_chvatal_closure(g)
        assert bondy_chvatal_closure(cl) == cl
        assert set(g.edges()) <= set(cl.edges())

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=8))
    def test_order_independent(self, g):
        expected = bondy_chvatal_closure(g)
        rng = random.Random(g.m * 31 + g.n)
        for _ in range(5):
            edges = set(g.edges())
            while True:
                deg = [sum(1 for e in edges if v in e) for v in range(g.n)]
                cands = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                         if (u, v) not in edges and deg[u] + deg[v] >= g.n]
                if not cands:
                    break
                edges.add(rng.choice(cands))
            assert build_graph(g.n, edges) == expected


class TestGraph6:
    def test_decode_known_string(self):
        # 'D' -> n = 5; '?' -> 000000; '{' -> 111100: pairs (0,4),(1,4),(2,4),(3,4)
        g = parse_graph6(b"D?{")
        assert g.n == 5
        assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
        assert write_graph6(g) == b"D?{"

    def test_k1(self):
        assert write_graph6(complete(1)) == b"@"
        assert parse_graph6("@") == complete(1)

    @pytest.mark.parametrize("bad", [b"", b"D?", b"D?{?", b"D?|", b"\x20", b"~?", b"~~??????"])
    def test_malformed(self, bad):
        with pytest.raises(GraphFormatError):
            parse_graph6(bad)

    def test_newline_tolerated(self):
        assert parse_graph6(b"D?{\n") == parse_graph6(b"D?{")

    def test_long_form(self):
        g = cycle(70)
        data = write_graph6(g)
        assert data[:1] == b"~" and data[1:4] == bytes([63, 63 + 1, 63 + 6])
        assert parse_graph6(data) == g

    def test_round_trip_exhaustive_small(self):
        for n in range(1, 6):
            for g in all_labeled(n):
                assert parse_graph6(write_graph6(g)) == g

    def test_file_reader(self):
        lines = [b">>graph6<<D?{\n", b"\n", b"@\n"]
        assert [g.n for g in read_graph6_lines(lines)] == [5, 1]

    def test_file_reader_line_number(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            list(read_graph6_lines([b"@\n", b"D?\n"]))


class TestEdgeList:
    def test_round_trip(self):
        g = complete_bipartite(2, 3)
        text = write_edge_list(g)
        assert text.splitlines()[0] == "5 6"
        assert parse_edge_list(text) == g

    @pytest.mark.parametrize("text, line", [("", 1), ("3\n", 1), ("3 1\n0 5\n", 2), ("3 2\n0 1\n", 1), ("3 1\n0 x\n", 2)])
    def test_errors(self, text, line):
        with pytest.raises(GraphFormatError) as info:
            parse_edge_list(text)
        assert info.value.line == line


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_neighborhood_disjoint_from_set(g):
    rng = random.Random(g.m)
    S = {v for v in range(g.n) if rng.random() < 0.5} or {0}
    assert not neighborhood_of_set(g, S) & S


@settings(max_examples=300, deadline=None)
@given(graph_with_non_edge(max_n=8))
def test_monotone_under_edge_addition(case):
    g, u, v = case
    h = g.with_edge(u, v)
    assert sigma2(h) >= sigma2(g)
    assert holes.tialpha_formula(h) <= holes.tialpha_formula(g)


def test_kernels_agree_with_python_graph_core():
    for n in range(1, 6):
        for g in all_labeled(n):
            adj = g.kernel_adj()
            s2 = K.sigma2(adj, n)
            assert (s2 >= K.SIGMA_INF and sigma2(g) == INFINITY) or s2 == sigma2(g)
            assert sorted(int(c) for c in K.component_masks(adj, n, g.full_mask)) == sorted(component_masks(g))
            assert K.has_triangle(adj, n) == has_triangle(g)[0]
            assert (K.bipartition(adj, n) >= 0) == is_bipartite(g)
            assert K.is_balanced_complete_bipartite(adj, n) == is_balanced_complete_bipartite(g)
            assert list(K.degrees(adj, n)) == degree_sequence(g)


def test_kernel_popcount():
    rng = np.random.default_rng(0)
    for x in rng.integers(0, 1 << 62, size=200):
        assert K.popcount(np.int64(x)) == int(x).bit_count()
