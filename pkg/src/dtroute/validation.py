"""Downstream-criterion validation of candidate next hops and loop-freedom audit."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .graph import Graph
from .kd import KdCosts, kd
from .spt import INF, SptResult, ecmp_candidates
from .transverse import CostMatrix, dt, mdt

PRIMARY = "primary"
RULE = "rule"

# per destination: {next hop: PRIMARY | RULE}; empty for the root and unreachable nodes
ValidatedSet = list[dict[int, str]]


def _strict(lhs: float, rhs: float) -> bool:
    return lhs < rhs


def validate_rule1(costs: KdCosts) -> ValidatedSet:
    """Keep neighbor v for d iff ``C1(v, d) < C1(s, d)``."""
    spt = costs.root_spt
    out: ValidatedSet = []
    for d in range(len(spt.cost)):
        if d == costs.root or not spt.reachable(d):
            out.append({})
            continue
        got = {v: RULE for v, row in costs.neighbor_cost.items() if row[d] < spt.cost[d]}
        got[spt.first_hop[d]] = PRIMARY
        out.append(got)
    return out


def validate_rule2(mc: CostMatrix, spt: SptResult | None = None,
                   rule: Callable[[float, float], bool] = _strict) -> ValidatedSet:
    """Keep neighbor v for d iff ``Mc(v, d) - w(s, v) < Tc(d)``.

    ``rule`` replaces the comparison; it exists so tests can plug in an
    unsafe rule and watch the audit fail.
    """
    spt = spt or mc.spt
    s = mc.root
    out: ValidatedSet = []
    for d in range(len(spt.cost)):
        if d == s or not spt.reachable(d):
            out.append({})
            continue
        got: dict[int, str] = {}
        for r, v in enumerate(mc.neighbors):
            c = mc.mc[r][d]
            if c < INF and rule(c - mc.link_cost[r], spt.cost[d]):
                got[v] = RULE
        got[spt.first_hop[d]] = PRIMARY
        out.append(got)
    return out


def validate_ecmp(g: Graph, s: int) -> ValidatedSet:
    """Equal-cost next hops; they all pass the downstream test."""
    ec = ecmp_candidates(g, s)
    out: ValidatedSet = []
    for d in range(g.n):
        if d == s or not ec.spt.reachable(d):
            out.append({})
            continue
        got = {v: RULE for v in ec.next_hops[d]}
        got[ec.spt.first_hop[d]] = PRIMARY
        out.append(got)
    return out


# -- loop-freedom audit -------------------------------------------------------

ALGOS = ("ecmp", "dt", "mdt", "kd")


def validated_table(g: Graph, algo: str) -> list[ValidatedSet]:
    """Validated sets of every router for one algorithm/rule pairing."""
    if algo == "ecmp":
        return [validate_ecmp(g, s) for s in range(g.n)]
    if algo == "dt":
        return [validate_rule2(dt(g, s).matrix) for s in range(g.n)]
    if algo == "mdt":
        return [validate_rule2(mdt(g, s).matrix) for s in range(g.n)]
    if algo == "kd":
        return [validate_rule1(kd(g, s).costs) for s in range(g.n)]
    raise ValueError(f"unknown algorithm {algo!r}")


@dataclass
class AuditVerdict:
    destination: int
    acyclic: bool
    reaches: bool
    cycle: list[int] | None = None
    stuck: int | None = None  # a router with a finite cost but no next hop

    @property
    def ok(self) -> bool:
        return self.acyclic and self.reaches


def forwarding_graph(table: list[ValidatedSet], d: int) -> dict[int, set[int]]:
    return {s: set(sets[d]) for s, sets in enumerate(table) if s != d}


def audit_destination(table: list[ValidatedSet], d: int,
                      routers: Iterable[int] | None = None) -> AuditVerdict:
    """Check that the validated next hops towards ``d`` form a DAG draining into ``d``.

    ``routers`` lists the routers that have a route to ``d`` (default: all).
    """
    fwd = forwarding_graph(table, d)
    routers = set(fwd) if routers is None else set(routers) - {d}
    for x in sorted(routers):
        if not fwd.get(x):
            return AuditVerdict(d, True, False, stuck=x)
    # iterative three-colour DFS
    colour = {x: 0 for x in fwd}
    colour[d] = 2
    for start in sorted(fwd):
        if colour[start]:
            continue
        stack = [(start, iter(sorted(fwd[start])))]
        path = [start]
        colour[start] = 1
        while stack:
            x, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[x] = 2
                stack.pop()
                path.pop()
                continue
            c = colour.get(nxt, 2)
            if c == 1:
                return AuditVerdict(d, False, True, cycle=path[path.index(nxt):] + [nxt])
            if c == 0:
                colour[nxt] = 1
                path.append(nxt)
                stack.append((nxt, iter(sorted(fwd.get(nxt, ())))))
    return AuditVerdict(d, True, True)


def loopfreedom_audit(g: Graph, algo: str | list[ValidatedSet]) -> list[AuditVerdict]:
    """Audit every destination; ``algo`` is a name from ``ALGOS`` or a precomputed table."""
    if not g.is_connected():
        raise ValueError("loop-freedom audit needs a connected graph")
    table = validated_table(g, algo) if isinstance(algo, str) else algo
    return [audit_destination(table, d) for d in range(g.n)]
