import random

import pytest
from hypothesis import given

from dtroute.graph import (Graph, GraphError, TopologyGenSpec, dump_graph, generate_topology,
                           is_two_edge_connected, load_graph, random_two_edge_connected_graph)

from conftest import small_graphs


def test_symmetric_default():
    g = load_graph("a b 5")
    assert g.n == 2 and g.num_edges == 2
    assert g.weight(0, 1) == 5 and g.weight(1, 0) == 5


def test_asymmetric_weights():
    g = load_graph("a b 5 7\n")
    assert g.weight(g.index("a"), g.index("b")) == 5
    assert g.weight(g.index("b"), g.index("a")) == 7


@pytest.mark.parametrize("text, fragment", [
    ("a b 5\na b 6", "duplicate"),
    ("a b 5\nb a 6", "duplicate"),
    ("a a 1", "self-loop"),
    ("a b 0", "positive"),
    ("a b -2", "positive"),
    ("a b x", "weight"),
    ("a b", "expected"),
])
def test_rejects(text, fragment):
    with pytest.raises(GraphError) as err:
        load_graph(text)
    assert fragment in str(err.value)
    assert err.value.line is not None


def test_comments_and_order():
    g = load_graph("# header\nz y 1  # trailing\n\ny x 2\n")
    assert g.labels == ("z", "y", "x")


def test_unknown_label():
    with pytest.raises(GraphError):
        load_graph("a b 1").index("q")


def test_fig1(fig1):
    assert fig1.n == 16
    assert len(fig1.links) == 18 and fig1.num_edges == 36
    assert fig1.out_degree(fig1.index("s")) == 3
    assert fig1.weights() == {1}
    assert fig1.is_connected()


@given(small_graphs(min_nodes=1))
def test_roundtrip(g):
    assert load_graph(dump_graph(g)) == g


@given(small_graphs())
def test_symmetry_and_degree(g):
    for x, y, w in g.edges():
        assert w > 0 and g.has_edge(y, x) and x != y
    for x in range(g.n):
        assert g.out_degree(x) == len(g.succ(x)) == g.in_degree(x)


def test_generator_example():
    g = generate_topology(TopologyGenSpec(100, cluster_size=10, seed=7))
    assert g.is_connected()
    assert g.weights() == {1, 64}
    deg = g.mean_degree()
    assert 3 <= deg <= 5


def test_generator_deterministic():
    a = generate_topology(TopologyGenSpec(20, cluster_size=10, seed=1))
    b = generate_topology(TopologyGenSpec(20, cluster_size=10, seed=1))
    assert a == b and dump_graph(a) == dump_graph(b)


@pytest.mark.parametrize("n", [20, 60, 140, 200])
@pytest.mark.parametrize("seed", [0, 3])
def test_generator_properties(n, seed):
    spec = TopologyGenSpec(n, seed=seed)
    g = generate_topology(spec)
    assert g.n == n and g.is_connected()
    assert g.weights() == {spec.access_weight, spec.backbone_weight}
    assert 3 <= g.mean_degree() <= 5
    for x, y, w in g.edges():
        assert g.weight(y, x) == w


def test_generator_bad_spec():
    with pytest.raises(GraphError):
        generate_topology(TopologyGenSpec(5, cluster_size=10))


def test_bridges_small():
    tri = Graph.from_labeled_links([("a", "b", 1), ("b", "c", 1), ("c", "a", 1)])
    assert is_two_edge_connected(tri) == (True, [])
    path = Graph.from_labeled_links([("a", "b", 1), ("b", "c", 1)])
    ok, bridges = is_two_edge_connected(path)
    assert not ok and {frozenset(b) for b in bridges} == {frozenset("ab"), frozenset("bc")}


def test_bridges_fig1(fig1):
    ok, bridges = is_two_edge_connected(fig1)
    assert not ok
    assert frozenset(("11", "d")) in {frozenset(b) for b in bridges}


def _brute_bridges(g):
    out = set()
    for a, b, *_ in g.links:
        keep = [(g.label(x), g.label(y), w) for x, y, w, _ in g.links if {x, y} != {a, b}]
        labels = set(g.labels)
        h = Graph.from_labeled_links(keep) if keep else None
        if h is None or set(h.labels) != labels or not h.is_connected():
            out.add(frozenset((g.label(a), g.label(b))))
    return out


@given(small_graphs(min_nodes=2, max_nodes=12))
def test_bridges_match_brute_force(g):
    ok, bridges = is_two_edge_connected(g)
    expect = _brute_bridges(g)
    assert {frozenset(b) for b in bridges} == expect
    assert ok == (not expect)


def test_cycle_plus_chords_has_no_bridge():
    for seed in range(20):
        g = random_two_edge_connected_graph(random.Random(seed).randint(3, 12), random.Random(seed))
        assert is_two_edge_connected(g)[0]
