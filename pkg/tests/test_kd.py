import random

import pytest
from hypothesis import given

from dtroute.graph import Graph, random_connected_graph
from dtroute.kd import kd
from dtroute.oracle import oracle_first_hop_costs
from dtroute.spt import dijkstra
from dtroute.transverse import dt, mdt

from conftest import small_graphs


@pytest.mark.parametrize("d, expect", [
    ("c", [("n", 2), ("1", 3), ("6", 4)]),
    # the s-6-1-b-c-11-d route costs 6 once s is off limits
    ("d", [("n", 3), ("1", 5), ("6", 6)]),
])
def test_fig1(fig1, d, expect):
    res = kd(fig1, fig1.index("s"))
    assert [(fig1.label(k), c) for k, c in res.candidates[fig1.index(d)]] == expect


def test_two_nodes():
    g = Graph.from_labeled_links([("s", "a", 7)])
    assert kd(g, 0).candidates[1] == [(1, 7)]


@given(small_graphs(max_nodes=9))
def test_exact_and_ceiling(g):
    for s in range(g.n):
        res = kd(g, s)
        orc = oracle_first_hop_costs(g, s)
        spt = res.spt
        a, b = dt(g, s), mdt(g, s)
        for d in range(g.n):
            if d == s:
                continue
            for v in res.costs.link_cost:
                assert res.costs.via(v, d) == orc.via[v][d]
                assert res.costs.via(v, d) >= spt.cost[d]
            assert res.costs.via(spt.first_hop[d], d) == spt.cost[d]
            assert a.next_hops(d) <= b.next_hops(d) <= res.next_hops(d)


def test_ops_are_sum_of_runs():
    for seed in range(10):
        rng = random.Random(seed)
        g = random_connected_graph(rng.randint(3, 15), rng)
        for s in range(g.n):
            total = dijkstra(g, s).ops.total
            total += sum(dijkstra(g, v, exclude=s).ops.total for v, _ in g.succ(s))
            assert kd(g, s).ops.total == total
