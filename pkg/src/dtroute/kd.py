"""kD reference: one Dijkstra at the root plus one per neighbor."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .spt import INF, OpCounter, SptResult, dijkstra


@dataclass
class KdCosts:
    root: int
    root_spt: SptResult
    neighbor_cost: dict[int, list[float]]  # C1(v, .) computed without the root
    link_cost: dict[int, float]  # w(s, v)

    def via(self, v: int, d: int) -> float:
        """Cost of the best loop-free path s -> v -> ... -> d."""
        return self.link_cost[v] + self.neighbor_cost[v][d]


@dataclass
class KdResult:
    costs: KdCosts
    candidates: list[list[tuple[int, float]]]
    ops: OpCounter

    @property
    def spt(self) -> SptResult:
        return self.costs.root_spt

    def next_hops(self, d: int) -> set[int]:
        return {k for k, _ in self.candidates[d]}


def kd(g: Graph, s: int) -> KdResult:
    """Run k+(s)+1 Dijkstras and rank every neighbor with a loop-free path to each destination.

    Neighbor trees are computed with ``s`` removed, so ``w(s, v) + C1(v, d)``
    is the exact best cost of a path that never returns to ``s``. Whenever
    ``C1(v, d) < C1(s, d)`` the neighbor's best path avoids ``s`` anyway, so the
    downstream test gives the same answer as on the full graph.
    """
    root = dijkstra(g, s)
    ops = root.ops
    neighbor_cost: dict[int, list[float]] = {}
    link_cost: dict[int, float] = {}
    for v, w in g.succ(s):
        tree = dijkstra(g, v, exclude=s)
        ops = ops + tree.ops
        neighbor_cost[v] = tree.cost
        link_cost[v] = w
    costs = KdCosts(s, root, neighbor_cost, link_cost)
    candidates: list[list[tuple[int, float]]] = []
    for d in range(g.n):
        if d == s:
            candidates.append([])
            continue
        col = [(costs.via(v, d), v) for v in neighbor_cost if costs.via(v, d) < INF]
        candidates.append([(v, c) for c, v in sorted(col)])
    return KdResult(costs, candidates, ops)
