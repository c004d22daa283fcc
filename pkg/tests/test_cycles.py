import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from biphole import cycles
from biphole.families import complete, complete_bipartite, cycle, edgeless, gen_circulant_qk, path, star, union
from biphole.graph import build_graph, degree_sequence, delta, sigma2

from conftest import all_labeled, graphs


def test_k34_spectrum():
    g = complete_bipartite(3, 4)
    spec = cycles.cycle_spectrum(g)
    assert spec.present == frozenset({4, 6})
    assert not spec.is_hamiltonian and not cycles.is_hamiltonian(g)


def test_k33_hamiltonian_not_pancyclic():
    g = complete_bipartite(3, 3)
    assert cycles.is_hamiltonian(g) and not cycles.is_pancyclic(g)


@pytest.mark.parametrize("n", range(3, 9))
def test_complete_pancyclic(n):
    assert cycles.is_pancyclic(complete(n))


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_graph(n):
    spec = cycles.cycle_spectrum(cycle(n))
    assert spec.present == frozenset({n}) and spec.is_hamiltonian
    assert spec.is_pancyclic == (n == 3)


def test_small_graphs_not_hamiltonian():
    assert cycles.hamiltonian_cycle(complete(1)) is None
    assert cycles.hamiltonian_cycle(complete(2)) is None
    assert not cycles.is_pancyclic(complete(2))
    assert cycles.cycle_spectrum(path(5)).present == frozenset()


def test_witness_is_valid(petersen):
    assert not cycles.is_hamiltonian(petersen)
    assert cycles.cycle_spectrum(petersen).present == frozenset({5, 6, 8, 9})
    w = cycles.s_cyclable(petersen, range(9))
    assert w is not None and w.is_valid(petersen) and len(w) == 9


def test_hamiltonian_path():
    assert cycles.hamiltonian_path(path(5)) in ([0, 1, 2, 3, 4], [4, 3, 2, 1, 0])
    assert cycles.hamiltonian_path(star(3)) is None
    assert cycles.hamiltonian_path(complete(1)) == [0]


def test_s_cyclable_examples(bowtie_pair):
    assert cycles.s_cyclable(bowtie_pair, {1, 2}) is not None
    assert cycles.s_cyclable(bowtie_pair, {1, 3}) is None
    assert cycles.s_cyclable(bowtie_pair, []) is not None
    assert cycles.s_cyclable(path(4), []) is None


def test_empty_set_finds_cycle_avoiding_vertex_zero():
    g = union(edgeless(1), complete(3))
    w = cycles.s_cyclable(g, [])
    assert w is not None and 0 not in w.vertices


def test_x_set():
    g = star(3)
    assert cycles.x_set(g, 2) == frozenset({0})
    assert cycles.x_set(g, 1) == frozenset(range(4))


def test_exhaustive_against_bruteforce():
    for n in range(1, 6):
        for g in all_labeled(n):
            E = oracles.edge_set(g)
            lengths = oracles.cycle_lengths(n, E)
            spec = cycles.cycle_spectrum(g)
            assert spec.present == frozenset(lengths)
            assert cycles.is_hamiltonian(g) == (n in lengths)
            assert (cycles.hamiltonian_path(g) is not None) == oracles.hamiltonian_path(n, E)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=3, max_n=7), st.data())
def test_s_cyclable_against_bruteforce(g, data):
    S = data.draw(st.sets(st.integers(0, g.n - 1), max_size=4))
    w = cycles.s_cyclable(g, S)
    assert (w is not None) == oracles.cycle_through(g.n, oracles.edge_set(g), S)
    if w is not None:
        assert w.is_valid(g) and set(S) <= set(w.vertices)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=3, max_n=8))
def test_whole_vertex_set_means_hamiltonian(g):
    assert (cycles.s_cyclable(g, range(g.n)) is not None) == cycles.is_hamiltonian(g)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=3, max_n=8))
def test_dirac_and_ore(g):
    if 2 * delta(g) >= g.n or sigma2(g) >= g.n:
        assert cycles.is_hamiltonian(g)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=3, max_n=8))
def test_witnesses(g):
    w = cycles.hamiltonian_cycle(g)
    if w is not None:
        assert w.is_valid(g) and sorted(w.vertices) == list(range(g.n))
    path_ = cycles.hamiltonian_path(g)
    if path_ is not None:
        assert sorted(path_) == list(range(g.n))
        assert all(g.has_edge(a, b) for a, b in itertools.pairwise(path_))


class TestLargeGraphs:
    def test_backtracking_cycle(self):
        g = cycle(30)
        w = cycles.hamiltonian_cycle(g)
        assert w is not None and w.is_valid(g) and len(w) == 30

    def test_backtracking_negative(self):
        g = complete_bipartite(13, 14)
        assert cycles.hamiltonian_cycle(g) is None

    def test_backtracking_s_cycle(self):
        g = union(cycle(20), cycle(10))
        assert cycles.s_cyclable(g, {0, 19}) is not None
        assert cycles.s_cyclable(g, {0, 25}) is None
        w = cycles.s_cyclable(g, [])
        assert w is not None and w.is_valid(g)

    def test_circulant_hamiltonian(self):
        g = gen_circulant_qk(1, 2)
        assert cycles.is_hamiltonian(g)

    def test_dp_refuses_large_path_search(self):
        with pytest.raises(ValueError):
            cycles.hamiltonian_path(cycle(30))

    def test_dp_and_backtracking_agree_at_boundary(self):
        g = build_graph(24, [(v, (v + 1) % 24) for v in range(24)] + [(0, 12)])
        assert cycles.is_hamiltonian(g) == (cycles._backtrack_cycle(g, g.full_mask, True) is not None)
        assert degree_sequence(g)[0] == 3
