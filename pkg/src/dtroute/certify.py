"""Check the multipath algorithms against the brute-force oracle on one graph."""

from __future__ import annotations

from collections import OrderedDict

from .graph import Graph, is_two_edge_connected
from .kd import kd
from .oracle import INF, heap_dijkstra, oracle_first_hop_costs, oracle_transverse_costs
from .spt import ecmp_candidates
from .transverse import dt, mdt
from .validation import ALGOS, loopfreedom_audit, validate_rule1, validate_rule2

INVARIANTS = (
    "soundness",
    "primary_exact",
    "dt_class_exact",
    "alternate_gives_two",
    "bridgeless_gives_two",
    "mdt_dominates_dt",
    "ecmp_in_mdt",
    "dt_in_mdt_in_kd",
    "kd_exact",
    "validated_mdt_in_kd",
    "validated_downstream",
    "loop_free",
)


def certify(g: Graph, max_nodes: int | None = None) -> "OrderedDict[str, list[str]]":
    """Return, per invariant, a list of counterexample descriptions (empty = pass)."""
    fails: OrderedDict[str, list[str]] = OrderedDict((k, []) for k in INVARIANTS)
    lab = g.label
    bridge_free = g.is_connected() and g.n >= 3 and is_two_edge_connected(g)[0]
    dist = [heap_dijkstra(g, v) for v in range(g.n)]
    for s in range(g.n):
        orc = oracle_first_hop_costs(g, s, max_nodes=max_nodes)
        r_dt, r_mdt, r_kd = dt(g, s), mdt(g, s), kd(g, s)
        ec = ecmp_candidates(g, s)
        spt = r_dt.spt
        cls = oracle_transverse_costs(g, spt, max_nodes=max_nodes)
        v2 = validate_rule2(r_mdt.matrix)
        v1 = validate_rule1(r_kd.costs)
        for d in range(g.n):
            if d == s or not spt.reachable(d):
                continue
            where = f"s={lab(s)} d={lab(d)}"
            for res in (r_dt, r_mdt):
                m = res.matrix
                for k in m.neighbors:
                    c = m.cost(k, d)
                    if c < INF and c < orc.via[k][d]:
                        fails["soundness"].append(f"{where} k={lab(k)} Mc={c} < {orc.via[k][d]}")
                if m.cost(spt.first_hop[d], d) != spt.cost[d]:
                    fails["primary_exact"].append(where)
            for k in r_dt.matrix.neighbors:
                if r_dt.matrix.cost(k, d) != cls.best(k, d):
                    fails["dt_class_exact"].append(
                        f"{where} k={lab(k)} DT={r_dt.matrix.cost(k, d)} classes={cls.best(k, d)}")
                if r_mdt.matrix.cost(k, d) > r_dt.matrix.cost(k, d):
                    fails["mdt_dominates_dt"].append(f"{where} k={lab(k)}")
                if r_kd.costs.via(k, d) != orc.via[k][d]:
                    fails["kd_exact"].append(f"{where} k={lab(k)}")
            n_dt, n_mdt, n_kd = r_dt.next_hops(d), r_mdt.next_hops(d), r_kd.next_hops(d)
            if orc.alternate_exists(d) and (len(n_dt) < 2 or len(n_mdt) < 2):
                fails["alternate_gives_two"].append(where)
            if bridge_free and (len(n_dt) < 2 or len(n_mdt) < 2):
                fails["bridgeless_gives_two"].append(where)
            if not set(ec.next_hops[d]) <= n_mdt:
                fails["ecmp_in_mdt"].append(where)
            if not (n_dt <= n_mdt <= n_kd):
                fails["dt_in_mdt_in_kd"].append(where)
            if not set(v2[d]) <= set(v1[d]):
                fails["validated_mdt_in_kd"].append(where)
            for table in (v1, v2):
                for v in table[d]:
                    if not dist[v][d] < dist[s][d]:
                        fails["validated_downstream"].append(f"{where} v={lab(v)}")
    if g.is_connected():
        for algo in ALGOS:
            for verdict in loopfreedom_audit(g, algo):
                if not verdict.ok:
                    fails["loop_free"].append(f"{algo} d={lab(verdict.destination)} "
                                              f"cycle={verdict.cycle} stuck={verdict.stuck}")
    return fails


def summary_lines(fails) -> list[str]:
    return [f"{'PASS' if not v else 'FAIL'} {k}" + (f" ({len(v)} counterexamples, first: {v[0]})" if v else "")
            for k, v in fails.items()]
