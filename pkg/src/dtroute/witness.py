"""Seeded searches for small graphs that exhibit a specific behaviour."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, TopologyGenSpec, generate_topology, random_connected_graph
from .spt import ecmp_candidates
from .transverse import dt, mdt


@dataclass
class Witness:
    seed: int
    graph: Graph
    root: int
    dest: int
    note: str = ""


def mdt_separation(g: Graph, s: int) -> int | None:
    """A destination where some equal-cost hop is missing from DT but present in mDT."""
    ec = ecmp_candidates(g, s)
    a, b = dt(g, s), mdt(g, s)
    for d in range(g.n):
        hops = set(ec.next_hops[d])
        if hops and not hops <= a.next_hops(d) and hops <= b.next_hops(d):
            return d
    return None


def find_mdt_witness(max_seeds: int = 10_000, *, sizes=(4, 10)) -> Witness | None:
    """First seed whose random graph separates mDT from DT on equal-cost hops."""
    for seed in range(max_seeds):
        rng = random.Random(seed)
        n = rng.randint(*sizes)
        g = random_connected_graph(n, rng, extra=rng.choice([0.3, 0.6, 1.0]), weights=(1, 3))
        for s in range(g.n):
            d = mdt_separation(g, s)
            if d is not None:
                return Witness(seed, g, s, d, "ecmp hop missing from dt, present in mdt")
    return None


def strict_rule2_alternate(g: Graph, s: int) -> tuple[int, int] | None:
    """(v, d) where rule 2 validates a non-primary hop whose cost exceeds the best."""
    from .validation import validate_rule2

    res = mdt(g, s)
    spt = res.spt
    for d, table in enumerate(validate_rule2(res.matrix)):
        for v in sorted(table):
            if v != spt.first_hop[d] and res.matrix.cost(v, d) > spt.cost[d]:
                return v, d
    return None


def find_rule2_witness(n_nodes: int = 20, max_seeds: int = 200) -> Witness | None:
    """Two-tier topology where a costlier alternate still passes rule 2."""
    for seed in range(max_seeds):
        g = generate_topology(TopologyGenSpec(n_nodes, seed=seed))
        for s in range(g.n):
            hit = strict_rule2_alternate(g, s)
            if hit is not None:
                return Witness(seed, g, s, hit[1], f"alternate {g.label(hit[0])}")
    return None
