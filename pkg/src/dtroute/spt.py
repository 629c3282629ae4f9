"""Instrumented Dijkstra shortest-path tree and ECMP next-hop inheritance."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields

from .graph import Graph

INF = math.inf


@dataclass
class OpCounter:
    """Elementary operation counts.

    One unit per comparison made while scanning for the minimum, per
    relaxation test (one for every explored edge, marked successor or not),
    per Tc assignment and per F assignment, per Mc test, per Mc assignment
    and per Tp assignment.
    """

    extract: int = 0
    relax_test: int = 0
    tc_update: int = 0
    mc_test: int = 0
    mc_update: int = 0
    tp_update: int = 0

    @property
    def total(self) -> int:
        return sum(getattr(self, f.name) for f in fields(self))

    def __add__(self, other: "OpCounter") -> "OpCounter":
        return OpCounter(**{f.name: getattr(self, f.name) + getattr(other, f.name) for f in fields(self)})

    def as_dict(self) -> dict[str, int]:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["total"] = self.total
        return d


@dataclass
class SptResult:
    root: int
    cost: list[float]  # Tc
    father: list[int]  # F, -1 for the root and unreachable nodes
    order: list[int]  # T, marking order
    first_hop: list[int]  # NH1, -1 for the root and unreachable nodes
    ops: OpCounter = field(default_factory=OpCounter)

    def reachable(self, d: int) -> bool:
        return self.cost[d] < INF

    def path(self, d: int) -> list[int]:
        """Tree path root..d as a node list (empty if unreachable)."""
        if not self.reachable(d):
            return []
        out = [d]
        while out[-1] != self.root:
            out.append(self.father[out[-1]])
        return out[::-1]


def _extract_min(unmarked: list[int], cost: list[float], ops: OpCounter) -> int:
    # unmarked is kept in index order, so min() returns the smallest index among ties
    ops.extract += len(unmarked) - 1
    return min(unmarked, key=cost.__getitem__)


def _first_hop(x: int, root: int, father: list[int], first_hop: list[int]) -> int:
    f = father[x]
    return x if f == root else first_hop[f]


def dijkstra(g: Graph, s: int, exclude: int | None = None) -> SptResult:
    """Array-list Dijkstra from ``s``.

    Ties in the minimum scan go to the smallest index; an equal-cost relaxation
    keeps the existing father. ``exclude`` removes one node from the search
    (used for neighbor trees computed without the calculating router).
    """
    n = g.n
    ops = OpCounter()
    cost = [INF] * n
    father = [-1] * n
    first_hop = [-1] * n
    marked = [False] * n
    order: list[int] = []
    cost[s] = 0
    if exclude is not None:
        marked[exclude] = True
    unmarked = [i for i in range(n) if not marked[i]]
    while unmarked:
        x = _extract_min(unmarked, cost, ops)
        if cost[x] == INF:
            break
        unmarked.remove(x)
        marked[x] = True
        order.append(x)
        if x != s:
            first_hop[x] = _first_hop(x, s, father, first_hop)
        cx = cost[x]
        for y, w in g.succ(x):
            if y == exclude:
                continue
            ops.relax_test += 1
            if cx + w < cost[y]:
                cost[y] = cx + w
                father[y] = x
                ops.tc_update += 2
    return SptResult(s, cost, father, order, first_hop, ops)


@dataclass
class EcmpCandidates:
    root: int
    cost: list[float]
    next_hops: list[frozenset[int]]  # empty for the root and unreachable nodes
    spt: SptResult

    def candidates(self, d: int) -> list[tuple[int, float]]:
        return [(v, self.cost[d]) for v in sorted(self.next_hops[d])]


def ecmp_candidates(g: Graph, s: int) -> EcmpCandidates:
    """Dijkstra sweep with next-hop inheritance on ``Tc(x) + w(x, y) <= Tc(y)``."""
    n = g.n
    ops = OpCounter()
    cost = [INF] * n
    father = [-1] * n
    first_hop = [-1] * n
    hops: list[set[int]] = [set() for _ in range(n)]
    marked = [False] * n
    order: list[int] = []
    cost[s] = 0
    unmarked = list(range(n))
    while unmarked:
        x = _extract_min(unmarked, cost, ops)
        if cost[x] == INF:
            break
        unmarked.remove(x)
        marked[x] = True
        order.append(x)
        if x != s:
            first_hop[x] = _first_hop(x, s, father, first_hop)
        cx = cost[x]
        for y, w in g.succ(x):
            ops.relax_test += 1
            if marked[y]:
                continue
            inherited = {y} if x == s else hops[x]
            c = cx + w
            if c < cost[y]:
                cost[y] = c
                father[y] = x
                ops.tc_update += 2
                hops[y] = set(inherited)
                ops.tp_update += len(inherited)
            elif c == cost[y]:
                new = inherited - hops[y]
                hops[y] |= new
                ops.tp_update += len(new)
    spt = SptResult(s, cost, father, order, first_hop, ops)
    return EcmpCandidates(s, cost, [frozenset(h) for h in hops], spt)
