"""Dijkstra-Transverse (DT) and multi-Dijkstra-Transverse (mDT) multipath cost matrices.

Both algorithms run one instrumented Dijkstra sweep from the root ``s`` and
fill a cost matrix ``Mc`` indexed by (neighbor of s, destination). A finite
``Mc(k, d)`` is the cost of a real s-to-d path whose first hop is ``k``; it
overestimates the best such path. The sweep is followed by one backward pass
(climbing SPT links towards the branch head) and one forward pass (descending
SPT links), which turn the simple transverse paths recorded during the sweep
into backward and forward transverse paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .spt import INF, OpCounter, SptResult, _extract_min, _first_hop


@dataclass
class CostMatrix:
    root: int
    neighbors: tuple[int, ...]  # row order
    link_cost: tuple[float, ...]  # w(s, k) per row
    mc: list[list[float]]  # mc[row][d]; the root column stays infinite
    spt: SptResult

    def row(self, k: int) -> int:
        return self.neighbors.index(k)

    def cost(self, k: int, d: int) -> float:
        return self.mc[self.row(k)][d]

    def column(self, d: int) -> dict[int, float]:
        return {k: self.mc[r][d] for r, k in enumerate(self.neighbors)}


@dataclass
class MultipathResult:
    matrix: CostMatrix
    candidates: list[list[tuple[int, float]]]  # per destination, sorted by (cost, next hop)
    ops: OpCounter

    @property
    def spt(self) -> SptResult:
        return self.matrix.spt

    def next_hops(self, d: int) -> set[int]:
        return {k for k, _ in self.candidates[d]}


def candidates_from_matrix(mc: CostMatrix) -> list[list[tuple[int, float]]]:
    """Finite ``(k, Mc(k, d))`` pairs per destination, ranked by cost then node index."""
    n = len(mc.spt.cost)
    out: list[list[tuple[int, float]]] = []
    for d in range(n):
        if d == mc.root:
            out.append([])
            continue
        col = [(c, k) for k, c in mc.column(d).items() if c < INF]
        out.append([(k, c) for c, k in sorted(col)])
    return out


def _compose(g: Graph, s: int, mc: list[list[float]], order: list[int], father: list[int],
             ops: OpCounter) -> None:
    """One backward pass over T reversed, then one forward pass over T."""
    rows = range(len(mc))
    for t in reversed(order):
        f = father[t]
        if t == s or f == s:
            continue
        w = g.weight(t, f)
        for r in rows:
            row = mc[r]
            ops.mc_test += 1
            c = row[t] + w
            if c < row[f]:
                row[f] = c
                ops.mc_update += 1
    for t in order:
        f = father[t]
        if t == s or f == s:
            continue
        w = g.weight(f, t)
        for r in rows:
            row = mc[r]
            ops.mc_test += 1
            c = row[f] + w
            if c < row[t]:
                row[t] = c
                ops.mc_update += 1


def _record(row: list[float], d: int, c: float, ops: OpCounter) -> None:
    ops.mc_test += 1
    if c < row[d]:
        row[d] = c
        ops.mc_update += 1


def _finish(g: Graph, s: int, neighbors, mc, cost, father, order, first_hop, ops) -> MultipathResult:
    _compose(g, s, mc, order, father, ops)
    spt = SptResult(s, cost, father, order, first_hop, ops)
    link_cost = tuple(g.weight(s, k) for k in neighbors)
    matrix = CostMatrix(s, neighbors, link_cost, mc, spt)
    return MultipathResult(matrix, candidates_from_matrix(matrix), ops)


def dt(g: Graph, s: int) -> MultipathResult:
    """Dijkstra-Transverse.

    During the sweep each marked node gets its primary entry
    ``Mc(NH1(y), y) = Tc(y)``, and each edge (x, y) explored from the marked
    node x records the simple transverse cost ``Tc(x) + w(x, y)`` under x's
    first hop. Only the primary first hop of x is ever extended.
    """
    n = g.n
    ops = OpCounter()
    neighbors = tuple(y for y, _ in g.succ(s))
    row_of = {k: r for r, k in enumerate(neighbors)}
    mc = [[INF] * n for _ in neighbors]
    cost = [INF] * n
    father = [-1] * n
    first_hop = [-1] * n
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
        cx = cost[x]
        if x != s:
            hx = first_hop[x] = _first_hop(x, s, father, first_hop)
            row_x = mc[row_of[hx]]
            row_x[x] = cx
            ops.mc_update += 1
        for y, w in g.succ(x):
            if y == s:
                ops.relax_test += 1
                continue
            if x == s:
                # first-hop edge, or a transverse edge from the root
                _record(mc[row_of[y]], y, w, ops)
            elif not marked[y] or first_hop[y] != hx:
                # y's branch is unknown while it is unmarked; a same-branch record
                # is never below Tc(y), so the primary entry overwrites it
                _record(row_x, y, cx + w, ops)
            ops.relax_test += 1
            if cx + w < cost[y]:
                cost[y] = cx + w
                father[y] = x
                ops.tc_update += 2
    return _finish(g, s, neighbors, mc, cost, father, order, first_hop, ops)


def mdt(g: Graph, s: int) -> MultipathResult:
    """multi-Dijkstra-Transverse.

    Like :func:`dt`, but an unmarked successor y of the marked node x inherits
    every next hop recorded towards x (``Tp(k, x)`` set), with cost
    ``Mc(k, x) + w(x, y)``, whether or not (x, y) is an SPT link. This carries
    all equal-cost first hops and paths that cross internal edges. Marked
    successors only receive the simple transverse record under x's first hop.
    """
    n = g.n
    ops = OpCounter()
    neighbors = tuple(y for y, _ in g.succ(s))
    row_of = {k: r for r, k in enumerate(neighbors)}
    mc = [[INF] * n for _ in neighbors]
    tp = [[False] * n for _ in neighbors]
    present: list[list[int]] = [[] for _ in range(n)]  # rows r with Tp(neighbors[r], x) set
    cost = [INF] * n
    father = [-1] * n
    first_hop = [-1] * n
    marked = [False] * n
    order: list[int] = []
    cost[s] = 0
    unmarked = list(range(n))

    def set_tp(r: int, y: int) -> None:
        ops.tp_update += 1
        if not tp[r][y]:
            tp[r][y] = True
            present[y].append(r)

    while unmarked:
        x = _extract_min(unmarked, cost, ops)
        if cost[x] == INF:
            break
        unmarked.remove(x)
        marked[x] = True
        order.append(x)
        cx = cost[x]
        if x != s:
            hx = first_hop[x] = _first_hop(x, s, father, first_hop)
        for y, w in g.succ(x):
            if y == s:
                ops.relax_test += 1
                continue
            if x == s:
                r = row_of[y]
                set_tp(r, y)
                _record(mc[r], y, w, ops)
            elif not marked[y]:
                for r in present[x]:
                    set_tp(r, y)
                    _record(mc[r], y, mc[r][x] + w, ops)
            elif first_hop[y] != hx:
                r = row_of[hx]
                set_tp(r, y)
                _record(mc[r], y, cx + w, ops)
            ops.relax_test += 1
            if cx + w < cost[y]:
                cost[y] = cx + w
                father[y] = x
                ops.tc_update += 2
    return _finish(g, s, neighbors, mc, cost, father, order, first_hop, ops)


def witness_path(g: Graph, res: MultipathResult, k: int, d: int) -> list[int] | None:
    """Re-derive one path of cost ``Mc(k, d)`` with first hop ``k`` (debugging aid).

    Searches simple paths from s through k, pruning by cost, so it is only
    meant for small graphs.
    """
    target = res.matrix.cost(k, d)
    if target == INF:
        return None
    s = res.matrix.root
    eps = 1e-9 * max(1.0, abs(target))

    def walk(path: list[int], c: float):
        x = path[-1]
        if x == d:
            return path if abs(c - target) <= eps else None
        for y, w in g.succ(x):
            if y not in path and c + w <= target + eps:
                found = walk(path + [y], c + w)
                if found:
                    return found
        return None

    return walk([s, k], g.weight(s, k))
