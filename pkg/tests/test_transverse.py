import random

import pytest
from hypothesis import given

from dtroute.graph import (Graph, is_two_edge_connected, load_graph, random_connected_graph,
                           random_two_edge_connected_graph)
from dtroute.oracle import oracle_first_hop_costs, oracle_transverse_costs
from dtroute.spt import INF, ecmp_candidates
from dtroute.transverse import candidates_from_matrix, dt, mdt, witness_path

from conftest import FIXTURES, small_graphs

@pytest.fixture(scope="module")
def fig1_dt(fig1):
    return dt(fig1, fig1.index("s"))


@pytest.mark.parametrize("k, d, expect", [
    ("1", "c", 3), ("1", "n", 4), ("1", "d", 6), ("6", "b", 3), ("6", "d", INF),
])
def test_fig1_matrix(fig1, fig1_dt, k, d, expect):
    g = fig1
    assert fig1_dt.matrix.cost(g.index(k), g.index(d)) == expect


@pytest.mark.parametrize("d, expect", [
    ("d", [("n", 3), ("1", 6)]),
    ("7", [("6", 2), ("1", 3)]),
])
def test_fig1_candidates(fig1, fig1_dt, d, expect):
    g = fig1
    got = candidates_from_matrix(fig1_dt.matrix)[g.index(d)]
    assert [(g.label(k), c) for k, c in got] == expect


def test_fig1_mdt_same_next_hops(fig1, fig1_dt):
    g = fig1
    m = mdt(g, g.index("s"))
    for d in range(g.n):
        assert m.next_hops(d) == fig1_dt.next_hops(d)
    # internal link c-11 lets mdt carry 1's cost past c
    assert m.matrix.cost(g.index("1"), g.index("d")) == 5


def test_fig1_witness_paths(fig1, fig1_dt):
    g = fig1
    path = witness_path(g, fig1_dt, g.index("1"), g.index("c"))
    assert [g.label(x) for x in path] == ["s", "1", "b", "c"]
    assert witness_path(g, fig1_dt, g.index("6"), g.index("d")) is None


def test_square():
    g = Graph.from_labeled_links([("s", "a", 1), ("a", "d", 1), ("s", "b", 1), ("b", "d", 1)])
    d = g.index("d")
    assert mdt(g, 0).candidates[d] == [(1, 2), (3, 2)]


def test_unreachable_column():
    g = Graph(["s", "a", "z"], [(0, 1, 1, 1)])
    for fn in (dt, mdt):
        res = fn(g, 0)
        assert res.candidates[2] == [] and res.candidates[0] == []


def _witness():
    text = (FIXTURES / "mdt_witness.txt").read_text()
    head = text.splitlines()[0]
    fields = dict(tok.split("=") for tok in head.split()[1:] if "=" in tok)
    g = load_graph(text)
    return g, g.index(fields["root"]), g.index(fields["dest"])


def test_mdt_witness_fixture():
    g, s, d = _witness()
    ec = set(ecmp_candidates(g, s).next_hops[d])
    assert not ec <= dt(g, s).next_hops(d)
    assert ec <= mdt(g, s).next_hops(d)


@given(small_graphs(max_nodes=9))
def test_sound_and_primary_exact(g):
    for s in range(g.n):
        orc = oracle_first_hop_costs(g, s)
        for res in (dt(g, s), mdt(g, s)):
            spt = res.spt
            for d in range(g.n):
                if d == s:
                    continue
                assert res.matrix.cost(spt.first_hop[d], d) == spt.cost[d]
                for k in res.matrix.neighbors:
                    c = res.matrix.cost(k, d)
                    assert c == INF or c >= orc.via[k][d]
                ks = [k for k, _ in res.candidates[d]]
                assert len(ks) == len(set(ks)) <= g.out_degree(s)


@given(small_graphs(max_nodes=9))
def test_dt_class_exact(g):
    for s in range(g.n):
        res = dt(g, s)
        cls = oracle_transverse_costs(g, res.spt)
        for d in range(g.n):
            if d != s:
                for k in res.matrix.neighbors:
                    assert res.matrix.cost(k, d) == cls.best(k, d)


@given(small_graphs(max_nodes=9))
def test_mdt_dominates(g):
    for s in range(g.n):
        a, b = dt(g, s), mdt(g, s)
        ec = ecmp_candidates(g, s)
        assert all(x >= y for ra, rb in zip(a.matrix.mc, b.matrix.mc) for x, y in zip(ra, rb))
        for d in range(g.n):
            assert a.next_hops(d) | set(ec.next_hops[d]) <= b.next_hops(d)


@given(small_graphs(max_nodes=9))
def test_alternate_gives_two_candidates(g):
    for s in range(g.n):
        orc = oracle_first_hop_costs(g, s)
        a, b = dt(g, s), mdt(g, s)
        for d in range(g.n):
            if d != s and orc.alternate_exists(d):
                assert len(a.candidates[d]) >= 2 and len(b.candidates[d]) >= 2


def test_bridge_free_gives_two_candidates():
    for seed in range(25):
        rng = random.Random(seed)
        g = random_two_edge_connected_graph(rng.randint(3, 12), rng)
        assert is_two_edge_connected(g)[0]
        for s in range(g.n):
            a, b = dt(g, s), mdt(g, s)
            for d in range(g.n):
                if d != s:
                    assert len(a.candidates[d]) >= 2 and len(b.candidates[d]) >= 2


def test_op_bound(corpus):
    # sweep plus two passes over k+(s) rows per node
    for entry in corpus:
        g = entry.graph
        for s in range(g.n):
            k = g.out_degree(s)
            bound = g.n ** 2 + g.num_edges + g.n * k
            assert dt(g, s).ops.total <= 4 * bound
            assert mdt(g, s).ops.total <= 4 * bound + g.num_edges * k


def test_neighbor_diagonal():
    for seed in range(20):
        rng = random.Random(seed)
        g = random_connected_graph(rng.randint(2, 10), rng)
        for s in range(g.n):
            res = mdt(g, s)
            for r, k in enumerate(res.matrix.neighbors):
                assert res.matrix.mc[r][k] == g.weight(s, k)
